#ifndef QVF_ERRORS_HPP
#define QVF_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace qvf {

/// Base class for every error thrown by the library.
class error : public std::runtime_error {
  public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input is mathematically outside the supported domain (e.g. a vector
/// field outside the class V2, spectra that violate Euler-Jacobi, a
/// degenerate resultant). Carries the list of violated conditions.
class domain_error : public error {
  public:
    explicit domain_error(const std::string& msg) : error(msg), reasons_{msg} {}
    domain_error(const std::string& msg, std::vector<std::string> reasons)
        : error(msg), reasons_(std::move(reasons)) {}
    const std::vector<std::string>& reasons() const noexcept { return reasons_; }

  private:
    std::vector<std::string> reasons_;
};

/// Malformed textual input (JSON, rational literals, CLI payloads).
class parse_error : public error {
  public:
    explicit parse_error(const std::string& msg) : error(msg) {}
};

/// A condition the pipeline guarantees internally failed to hold.
class internal_error : public error {
  public:
    explicit internal_error(const std::string& msg) : error(msg) {}
};

} // namespace qvf

#endif
