#pragma once

#include <stdexcept>
#include <string>

namespace dbal {

enum class errc {
  self_loop,
  vertex_out_of_range,
  disconnected,
  bad_params,
  bad_range,
  same_vertex,
  level_out_of_range,
  wrong_diameter,
  not_bipartite,
  identity_in_set,
  not_inverse_closed,
  not_generating,
  closure_too_large,
  empty_list,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string &msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string &msg) { throw error(code, msg); }

// Errors about the shape of the object handed to an operation (as opposed to
// malformed parameters or input text). The CLI maps these to exit code 2.
inline bool is_domain_error(errc code) {
  switch (code) {
  case errc::disconnected:
  case errc::same_vertex:
  case errc::level_out_of_range:
  case errc::wrong_diameter:
  case errc::not_bipartite:
    return true;
  default:
    return false;
  }
}

} // namespace dbal
