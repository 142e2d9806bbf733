#pragma once

#include <stdexcept>
#include <string>

namespace twlab {

enum class errc {
  parse_error,
  zero_size,
  non_prime_modulus,
  reducible_modulus,
  foreign_element,
  mixed_coefficient_rings,
  unbound_variable,
  invalid_modulus_degree,
  foreign_variable,
  arity_mismatch,
  unknown_operation,
  carrier_too_large,
  depth_too_large,
  index_mismatch,
  base_too_large,
  not_a_field,
  field_too_large,
  ring_mismatch,
  instance_mismatch,
  cap_exceeded,
  usage_error,
  internal_error,
};

const char* errc_name(errc c);

// All library failures throw this; `offset` carries the byte position for
// text-parse errors and is -1 otherwise.
class error : public std::runtime_error {
 public:
  error(errc c, const std::string& what, long byte_offset = -1)
      : std::runtime_error(what), code_(c), offset_(byte_offset) {}
  errc code() const { return code_; }
  long offset() const { return offset_; }

 private:
  errc code_;
  long offset_;
};

}  // namespace twlab
