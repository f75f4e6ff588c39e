#include "ladder/opalgebra.h"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace ladder {

// ---------------------------------------------------------------------------
// Gaussian rationals

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Gaussian Gaussian::inverse() const {
  Rational norm = re * re + im * im;
  if (sgn(norm) == 0) throw std::domain_error("inverse of zero");
  return {re / norm, -im / norm};
}

Gaussian i_power(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return Gaussian(1);
    case 1: return Gaussian(0, 1);
    case 2: return Gaussian(-1);
    default: return Gaussian(0, -1);
  }
}

// ---------------------------------------------------------------------------
// Coefficients

Coefficient::Coefficient(Gaussian g) {
  if (!g.is_zero()) terms_.emplace(Key{}, std::move(g));
}

Coefficient Coefficient::s(int power) { return term({power, 0}, Gaussian(1)); }

Coefficient Coefficient::u() { return term({0, 1}, Gaussian(1)); }

Coefficient Coefficient::term(Key key, Gaussian value) {
  Coefficient c;
  c.add(key, value);
  return c;
}

void Coefficient::add(Key key, const Gaussian& value) {
  if (value.is_zero()) return;
  // Reduce u^e to e in {0, 1} using u^2 = s^-1 / 2.
  Gaussian v = value;
  while (key.u_power >= 2) {
    key.u_power -= 2;
    key.s_power -= 1;
    v *= Gaussian(Rational(1, 2));
  }
  while (key.u_power < 0) {
    // u^-1 = 2 s u
    key.u_power += 2;
    key.s_power += 1;
    v *= Gaussian(2);
  }
  auto [it, inserted] = terms_.emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Coefficient::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Key{} && terms_.begin()->second == Gaussian(1);
}

bool Coefficient::is_simple() const {
  if (terms_.size() != 1) return false;
  const Gaussian& g = terms_.begin()->second;
  return sgn(g.re) == 0 || sgn(g.im) == 0;
}

std::optional<Gaussian> Coefficient::as_constant() const {
  if (terms_.empty()) return Gaussian(0);
  if (terms_.size() == 1 && terms_.begin()->first == Key{}) return terms_.begin()->second;
  return std::nullopt;
}

std::optional<Coefficient> Coefficient::inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [key, value] = *terms_.begin();
  return term({-key.s_power, -key.u_power}, value.inverse());
}

std::complex<double> Coefficient::evaluate(double s_value) const {
  std::complex<double> total = 0.0;
  const double u_value = 1.0 / std::sqrt(2.0 * s_value);
  for (const auto& [key, value] : terms_) {
    double scale = std::pow(s_value, key.s_power) * (key.u_power ? u_value : 1.0);
    total += value.to_complex() * scale;
  }
  return total;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  for (const auto& [key, value] : o.terms_) add(key, value);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  for (const auto& [key, value] : o.terms_) add(key, -value);
  return *this;
}

Coefficient operator-(const Coefficient& a) {
  Coefficient out;
  for (const auto& [key, value] : a.terms_) out.terms_.emplace(key, -value);
  return out;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient out;
  for (const auto& [ka, va] : a.terms_)
    for (const auto& [kb, vb] : b.terms_)
      out.add({ka.s_power + kb.s_power, ka.u_power + kb.u_power}, va * vb);
  return out;
}

// ---------------------------------------------------------------------------
// Operators

OperatorExpr::OperatorExpr(Coefficient c) {
  if (!c.is_zero()) terms_.emplace(MonomialKey{}, std::move(c));
}

OperatorExpr::OperatorExpr(const Monomial& m) { add_term(m.key, m.coeff); }

OperatorExpr OperatorExpr::r_power(int half_power) {
  MonomialKey key;
  key.r_half_power = half_power;
  return OperatorExpr(Monomial{key, Coefficient(1)});
}

OperatorExpr OperatorExpr::phase(PhaseVar v, int k) {
  MonomialKey key;
  key.phase[static_cast<int>(v)] = k;
  return OperatorExpr(Monomial{key, Coefficient(1)});
}

OperatorExpr OperatorExpr::derivative(DerivVar v, int order) {
  if (order < 0) throw std::invalid_argument("negative derivative order");
  MonomialKey key;
  key.deriv[static_cast<int>(v)] = order;
  return OperatorExpr(Monomial{key, Coefficient(1)});
}

void OperatorExpr::add_term(const MonomialKey& key, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool OperatorExpr::is_function() const {
  for (const auto& [key, c] : terms_)
    if (key.has_derivatives()) return false;
  return true;
}

bool OperatorExpr::depends_on_s() const {
  for (const auto& [key, c] : terms_)
    for (const auto& [ck, v] : c.terms())
      if (ck != Coefficient::Key{}) return true;
  return false;
}

std::optional<OperatorExpr> OperatorExpr::inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [key, c] = *terms_.begin();
  if (key.has_derivatives()) return std::nullopt;
  auto inv = c.inverse();
  if (!inv) return std::nullopt;
  MonomialKey k;
  k.r_half_power = -key.r_half_power;
  for (int v = 0; v < 3; ++v) k.phase[v] = -key.phase[v];
  return OperatorExpr(Monomial{k, *inv});
}

std::complex<double> OperatorExpr::evaluate_function(double w, double s_value) const {
  std::complex<double> total = 0.0;
  for (const auto& [key, c] : terms_) {
    if (key.has_derivatives() || key.has_phases())
      throw std::logic_error("evaluate_function on an operator with derivatives or phases");
    total += c.evaluate(s_value) * std::pow(w, 0.5 * key.r_half_power);
  }
  return total;
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

OperatorExpr& OperatorExpr::operator*=(const Coefficient& c) {
  container_type scaled;
  for (const auto& [key, value] : terms_) {
    Coefficient p = value * c;
    if (!p.is_zero()) scaled.emplace(key, std::move(p));
  }
  terms_ = std::move(scaled);
  return *this;
}

OperatorExpr operator-(const OperatorExpr& a) {
  OperatorExpr out;
  for (const auto& [key, c] : a.terms_) out.terms_.emplace(key, -c);
  return out;
}

namespace {

// d^n f = sum_j binom(n, j) f^{(j)} d^{n-j}: the Leibniz expansion of moving
// n derivatives past a function factor. Entry j holds the weight of d^{n-j}.
std::vector<Gaussian> radial_leibniz(int n, int half_power) {
  std::vector<Gaussian> out(n + 1);
  Rational p(half_power, 2);
  p.canonicalize();
  for (int j = 0; j <= n; ++j) out[j] = Gaussian(binomial(n, j) * falling_factorial(p, j));
  return out;
}

// d_v^n exp(i k v) = exp(i k v) (d_v + i k)^n
std::vector<Gaussian> phase_leibniz(int n, int k) {
  std::vector<Gaussian> out(n + 1);
  for (int j = 0; j <= n; ++j) {
    mpz_class kj;
    mpz_pow_ui(kj.get_mpz_t(), mpz_class(k).get_mpz_t(), static_cast<unsigned long>(j));
    out[j] = i_power(j) * Gaussian(binomial(n, j) * Rational(kj));
  }
  return out;
}

}  // namespace

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const Coefficient base = ca * cb;
      const auto wr = radial_leibniz(ka.deriv[0], kb.r_half_power);
      std::array<std::vector<Gaussian>, 3> wp;
      for (int v = 0; v < 3; ++v) wp[v] = phase_leibniz(ka.deriv[v + 1], kb.phase[v]);

      MonomialKey key;
      for (int v = 0; v < 3; ++v) key.phase[v] = ka.phase[v] + kb.phase[v];

      for (std::size_t jr = 0; jr < wr.size(); ++jr) {
        if (wr[jr].is_zero()) continue;
        for (std::size_t je = 0; je < wp[0].size(); ++je) {
          if (wp[0][je].is_zero()) continue;
          for (std::size_t ja = 0; ja < wp[1].size(); ++ja) {
            if (wp[1][ja].is_zero()) continue;
            for (std::size_t jb = 0; jb < wp[2].size(); ++jb) {
              if (wp[2][jb].is_zero()) continue;
              key.r_half_power = ka.r_half_power + kb.r_half_power - 2 * static_cast<int>(jr);
              const std::array<std::size_t, 4> shift{jr, je, ja, jb};
              for (int d = 0; d < 4; ++d)
                key.deriv[d] = ka.deriv[d] - static_cast<int>(shift[d]) + kb.deriv[d];
              Gaussian w = wr[jr] * wp[0][je] * wp[1][ja] * wp[2][jb];
              out.add_term(key, base * Coefficient(w));
            }
          }
        }
      }
    }
  }
  return out;
}

OperatorExpr multiply(const OperatorExpr& a, const OperatorExpr& b) { return a * b; }

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) { return a * b - b * a; }

OperatorExpr power(const OperatorExpr& a, int n) {
  if (n < 0) {
    auto inv = a.inverse();
    if (!inv) throw std::domain_error("negative power of a non-invertible operator");
    return power(*inv, -n);
  }
  OperatorExpr out = OperatorExpr::identity();
  for (int k = 0; k < n; ++k) out = out * a;
  return out;
}

OperatorExpr substitute_s(const OperatorExpr& expr, const Rational& value) {
  if (sgn(value) <= 0) throw std::domain_error("s stands for sqrt(-lambda) and must be positive");
  std::optional<Rational> u_value;
  bool u_checked = false;
  OperatorExpr out;
  for (const auto& [key, c] : expr.terms()) {
    Gaussian total;
    for (const auto& [ck, g] : c.terms()) {
      Rational factor = 1;
      Rational base = ck.s_power >= 0 ? value : Rational(1 / value);
      for (int k = 0; k < std::abs(ck.s_power); ++k) factor *= base;
      if (ck.u_power) {
        if (!u_checked) {
          u_checked = true;
          if (auto root = exact_sqrt(Rational(2 * value))) u_value = Rational(1 / *root);
        }
        if (!u_value)
          throw std::domain_error("u = (2s)^(-1/2) is irrational at s = " + to_string(value));
        factor *= *u_value;
      }
      total += g * Gaussian(factor);
    }
    out.add_term(key, Coefficient(total));
  }
  return out;
}

OperatorExpr swap_alpha_beta(const OperatorExpr& expr) {
  OperatorExpr out;
  for (const auto& [original, c] : expr.terms()) {
    MonomialKey key = original;
    std::swap(key.phase[1], key.phase[2]);
    std::swap(key.deriv[2], key.deriv[3]);
    out.add_term(key, c);
  }
  return out;
}

OperatorExpr normalize(const OperatorExpr& expr) {
  OperatorExpr out;
  for (const auto& [key, c] : expr.terms()) out += OperatorExpr(Monomial{key, c});
  return out;
}

// ---------------------------------------------------------------------------
// Linear algebra over Q(i)

namespace {

struct Coordinate {
  MonomialKey monomial;
  Coefficient::Key scalar;
  auto operator<=>(const Coordinate&) const = default;
};

using Vector = std::map<Coordinate, Gaussian>;

Vector flatten(const OperatorExpr& e) {
  Vector v;
  for (const auto& [key, c] : e.terms())
    for (const auto& [ck, g] : c.terms()) v.emplace(Coordinate{key, ck}, g);
  return v;
}

// Rows have distinct pivots, each pivot being the row's smallest coordinate,
// scaled to 1.
class EchelonBasis {
 public:
  bool insert(Vector v) {
    while (!v.empty()) {
      auto lead = v.begin();
      auto row = rows_.find(lead->first);
      if (row == rows_.end()) {
        Gaussian scale = lead->second.inverse();
        for (auto& [k, g] : v) g *= scale;
        Coordinate pivot = v.begin()->first;
        rows_.emplace(pivot, std::move(v));
        return true;
      }
      Gaussian factor = lead->second;
      for (const auto& [k, g] : row->second) {
        auto [it, inserted] = v.emplace(k, -(factor * g));
        if (!inserted) {
          it->second -= factor * g;
          if (it->second.is_zero()) v.erase(it);
        }
      }
    }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<Coordinate, Vector> rows_;
};

}  // namespace

std::size_t span_rank(const std::vector<OperatorExpr>& family) {
  EchelonBasis basis;
  for (const auto& e : family) basis.insert(flatten(e));
  return basis.rank();
}

ClosureReport closure_check(const std::vector<OperatorExpr>& basis, std::size_t max_dim) {
  if (basis.empty()) throw std::invalid_argument("closure_check needs a non-empty basis");
  if (max_dim < basis.size()) throw std::invalid_argument("max_dim is smaller than the basis");

  ClosureReport report;
  report.max_dim = max_dim;
  EchelonBasis echelon;
  for (const auto& e : basis)
    if (echelon.insert(flatten(e))) report.elements.push_back(e);

  // Commute every new element with every element seen before it.
  for (std::size_t j = 1; j < report.elements.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      OperatorExpr c = commutator(report.elements[i], report.elements[j]);
      if (c.is_zero()) continue;
      if (echelon.insert(flatten(c))) {
        report.elements.push_back(std::move(c));
        if (report.elements.size() > max_dim) {
          report.dimension = report.elements.size();
          report.closed = false;
          return report;
        }
      }
    }
  }
  report.dimension = report.elements.size();
  report.closed = true;
  return report;
}

}  // namespace ladder
