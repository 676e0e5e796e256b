#ifndef TWINREP_ERROR_HPP
#define TWINREP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace twinrep {

/// All library-reported failures (bad arguments, inadmissible
/// specializations, singular matrices, parse errors, ...).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace twinrep

#endif
