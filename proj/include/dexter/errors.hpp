#pragma once

#include <stdexcept>

namespace dexter {

// Base class of every exception thrown by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define DEXTER_DEFINE_ERROR(Name) \
  struct Name : error {           \
    using error::error;           \
  }

DEXTER_DEFINE_ERROR(word_too_long);
DEXTER_DEFINE_ERROR(not_a_dyck_word);
DEXTER_DEFINE_ERROR(not_a_pseudo_dyck_word);
DEXTER_DEFINE_ERROR(not_block_indecomposable);
DEXTER_DEFINE_ERROR(not_movable);
DEXTER_DEFINE_ERROR(choice_out_of_range);
DEXTER_DEFINE_ERROR(size_too_large);
DEXTER_DEFINE_ERROR(element_not_in_poset);
DEXTER_DEFINE_ERROR(element_set_mismatch);
DEXTER_DEFINE_ERROR(empty_operand);
DEXTER_DEFINE_ERROR(not_an_interval);
DEXTER_DEFINE_ERROR(not_in_shape_set);
DEXTER_DEFINE_ERROR(not_core);
DEXTER_DEFINE_ERROR(division_not_exact);
DEXTER_DEFINE_ERROR(letter_not_zero);
DEXTER_DEFINE_ERROR(step_not_one);
DEXTER_DEFINE_ERROR(starts_at_ground_level);
DEXTER_DEFINE_ERROR(size_mismatch);
DEXTER_DEFINE_ERROR(not_in_hochschild_interval);
DEXTER_DEFINE_ERROR(not_in_image);
DEXTER_DEFINE_ERROR(length_mismatch);
DEXTER_DEFINE_ERROR(not_a_lattice);
DEXTER_DEFINE_ERROR(too_large);

#undef DEXTER_DEFINE_ERROR

}  // namespace dexter
