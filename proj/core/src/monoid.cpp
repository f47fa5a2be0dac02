#include "cocycle_forge/error.hpp"
#include "cocycle_forge/semilinear.hpp"

namespace cocycle_forge {

namespace {

class AdditiveNaturals final : public OrderedMonoid {
 public:
  std::size_t width() const noexcept override { return 1; }
  MonoidValue neutral() const override { return {0}; }
  MonoidValue op(const MonoidValue& a, const MonoidValue& b) const override {
    return {a.at(0) + b.at(0)};
  }
  int compare(const MonoidValue& a, const MonoidValue& b) const override {
    return a.at(0) < b.at(0) ? -1 : (a.at(0) > b.at(0) ? 1 : 0);
  }
  std::string format(const MonoidValue& v) const override { return std::to_string(v.at(0)); }
  std::string describe() const override { return "N"; }
};

class LexProduct final : public OrderedMonoid {
 public:
  explicit LexProduct(std::vector<MonoidPtr> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_) width_ += f->width();
  }

  std::size_t width() const noexcept override { return width_; }

  MonoidValue neutral() const override {
    MonoidValue out;
    for (const auto& f : factors_) {
      const auto n = f->neutral();
      out.insert(out.end(), n.begin(), n.end());
    }
    return out;
  }

  MonoidValue op(const MonoidValue& a, const MonoidValue& b) const override {
    MonoidValue out;
    out.reserve(width_);
    std::size_t at = 0;
    for (const auto& f : factors_) {
      const auto r = f->op(slice(a, at, f->width()), slice(b, at, f->width()));
      out.insert(out.end(), r.begin(), r.end());
      at += f->width();
    }
    return out;
  }

  int compare(const MonoidValue& a, const MonoidValue& b) const override {
    std::size_t at = 0;
    for (const auto& f : factors_) {
      const int c = f->compare(slice(a, at, f->width()), slice(b, at, f->width()));
      if (c != 0) return c;
      at += f->width();
    }
    return 0;
  }

  std::string format(const MonoidValue& v) const override {
    std::string out = "(";
    std::size_t at = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i > 0) out += ',';
      out += factors_[i]->format(slice(v, at, factors_[i]->width()));
      at += factors_[i]->width();
    }
    return out + ")";
  }

  std::string describe() const override {
    std::string out = "Lex(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i > 0) out += ',';
      out += factors_[i]->describe();
    }
    return out + ")";
  }

 private:
  static MonoidValue slice(const MonoidValue& v, std::size_t at, std::size_t w) {
    ensure(at + w <= v.size(), "monoid value has the wrong width");
    return MonoidValue(v.begin() + static_cast<std::ptrdiff_t>(at),
                       v.begin() + static_cast<std::ptrdiff_t>(at + w));
  }

  std::vector<MonoidPtr> factors_;
  std::size_t width_ = 0;
};

}  // namespace

MonoidPtr additive_naturals() {
  static const MonoidPtr m = std::make_shared<AdditiveNaturals>();
  return m;
}

MonoidPtr lex_product(std::vector<MonoidPtr> factors) {
  if (factors.empty()) throw Error(ErrorCode::precondition, "lex product of no factors");
  return std::make_shared<LexProduct>(std::move(factors));
}

MonoidPtr lex_power(const MonoidPtr& base, std::size_t k) {
  return lex_product(std::vector<MonoidPtr>(k, base));
}

std::optional<std::string> check_monoid_axioms(const OrderedMonoid& m,
                                               const std::vector<MonoidValue>& samples) {
  const MonoidValue e = m.neutral();
  for (const auto& x : samples) {
    if (m.less(x, e)) return "neutral element is not the minimum: " + m.format(x);
    if (m.op(e, x) != x || m.op(x, e) != x) return "neutral element fails at " + m.format(x);
  }
  for (const auto& x : samples)
    for (const auto& y : samples) {
      const int c = m.compare(x, y);
      if (c != -m.compare(y, x)) return "order is not antisymmetric";
      for (const auto& z : samples) {
        if (m.op(m.op(x, y), z) != m.op(x, m.op(y, z)))
          return "associativity fails at " + m.format(x) + ", " + m.format(y) + ", " + m.format(z);
        if (c < 0 && !(m.less(m.op(x, z), m.op(y, z)) && m.less(m.op(z, x), m.op(z, y))))
          return "translation compatibility fails at " + m.format(x) + " < " + m.format(y) +
                 " with " + m.format(z);
      }
    }
  return std::nullopt;
}

}  // namespace cocycle_forge
