#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dexter {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);
BigInt factorial(int n);
BigInt catalan(int n);
BigInt motzkin(int n);
BigInt narayana(int n, int k);

}  // namespace dexter
