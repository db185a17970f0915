#include "dnfenum/graycode.hpp"

namespace dnfenum {

// Focus pointers: focus_[j] for j in [0, k]. Position j (0-based) is flipped
// when focus_[0] == j; the generation ends when focus_[0] reaches k.
GrayState::GrayState(std::size_t k) : k_(k), focus_(k + 1), done_(k == 0) {
  for (std::size_t j = 0; j <= k; ++j) focus_[j] = j;
}

std::optional<std::size_t> GrayState::next() {
  if (done_) return std::nullopt;
  const std::size_t j = focus_[0];
  focus_[0] = 0;
  if (j == k_) {
    done_ = true;
    return std::nullopt;
  }
  focus_[j] = focus_[j + 1];
  focus_[j + 1] = j + 1;
  return j + 1;
}

TermModelEnum::TermModelEnum(const Term& c, std::size_t n, StepCounter* shared)
    : ModelEnumerator(shared), own_regs_(n, 0), regs_(&own_regs_), gray_(0) {
  init(c, nullptr);
}

TermModelEnum::TermModelEnum(const Term& c, const PartialAssignment& fixed, Assignment& registers,
                             StepCounter* shared)
    : ModelEnumerator(shared), regs_(&registers), gray_(0) {
  init(c, &fixed);
}

void TermModelEnum::init(const Term& c, const PartialAssignment* fixed) {
  Assignment& r = *regs_;
  const std::size_t n = r.size();
  std::vector<std::int8_t> forced(n, -1);
  if (fixed)
    for (std::size_t i = 0; i < n; ++i)
      if (fixed->contains(static_cast<Var>(i + 1))) forced[i] = static_cast<std::int8_t>(fixed->get(static_cast<Var>(i + 1)));
  for (auto l : c) forced[l.var() - 1] = l.positive() ? 1 : 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (forced[i] < 0) {
      sigma_.push_back(static_cast<Var>(i + 1));
      r[i] = 0;
    } else {
      r[i] = static_cast<std::uint8_t>(forced[i]);
    }
    tick();
  }
  gray_ = GrayState(sigma_.size());
}

bool TermModelEnum::next() {
  if (!started_) {
    started_ = true;
    tick();
    return true;
  }
  auto pos = gray_.next();
  tick();
  if (!pos) return false;
  const Var v = sigma_[*pos - 1];
  (*regs_)[v - 1] ^= 1u;
  last_flip_ = v;
  tick();
  return true;
}

}  // namespace dnfenum
