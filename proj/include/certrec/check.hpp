#ifndef CERTREC_CHECK_HPP
#define CERTREC_CHECK_HPP

#include <optional>
#include <utility>

namespace certrec {

/// Outcome of a checker: either pass, or a witness explaining the failure.
template <class Witness>
class Check {
 public:
  Check() = default;
  static Check pass() { return Check{}; }
  static Check fail(Witness w) {
    Check c;
    c.witness_ = std::move(w);
    return c;
  }

  bool passed() const { return !witness_.has_value(); }
  explicit operator bool() const { return passed(); }

  const Witness& witness() const { return *witness_; }
  const std::optional<Witness>& maybe_witness() const { return witness_; }

 private:
  std::optional<Witness> witness_;
};

}  // namespace certrec

#endif  // CERTREC_CHECK_HPP
