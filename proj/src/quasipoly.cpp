#include "iop/quasipoly.hpp"

#include "iop/linalg.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace iop {

namespace {

std::int64_t mod(std::int64_t t, std::int64_t p) {
  const std::int64_t r = t % p;
  return r < 0 ? r + p : r;
}

}  // namespace

Quasipolynomial::Quasipolynomial(std::vector<Polynomial> constituents)
    : constituents_(std::move(constituents)) {
  if (constituents_.empty()) throw std::invalid_argument("quasipolynomial needs a constituent");
}

const Polynomial& Quasipolynomial::constituent(std::int64_t residue) const {
  return constituents_[static_cast<std::size_t>(mod(residue, period()))];
}

int Quasipolynomial::degree() const {
  int d = -1;
  for (const auto& c : constituents_) d = std::max(d, c.degree());
  return d;
}

Rational Quasipolynomial::operator()(std::int64_t t) const { return constituent(t)(Rational(t)); }

std::int64_t Quasipolynomial::minimal_period() const {
  const std::int64_t p = period();
  for (std::int64_t q = 1; q < p; ++q) {
    if (p % q) continue;
    bool ok = true;
    for (std::int64_t r = q; r < p && ok; ++r) ok = constituents_[static_cast<std::size_t>(r)] == constituents_[static_cast<std::size_t>(r % q)];
    if (ok) return q;
  }
  return p;
}

Quasipolynomial Quasipolynomial::canonical() const {
  const std::int64_t q = minimal_period();
  return Quasipolynomial(std::vector<Polynomial>(constituents_.begin(), constituents_.begin() + q));
}

Quasipolynomial Quasipolynomial::inflated(std::int64_t multiple) const {
  if (multiple < 1 || multiple % period()) throw std::invalid_argument("not a multiple of the period");
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(multiple));
  for (std::int64_t r = 0; r < multiple; ++r) out.push_back(constituent(r));
  return Quasipolynomial(std::move(out));
}

Quasipolynomial Quasipolynomial::stretched(std::int64_t k) const {
  if (k < 1) throw std::invalid_argument("stretch factor must be positive");
  std::vector<Polynomial> out(static_cast<std::size_t>(k * period()));
  for (std::int64_t r = 0; r < period(); ++r) {
    std::vector<Rational> coeffs = constituents_[static_cast<std::size_t>(r)].coefficients();
    Rational scale = 1;
    for (auto& c : coeffs) {
      c /= scale;
      scale *= k;
    }
    out[static_cast<std::size_t>(r * k)] = Polynomial(std::move(coeffs));
  }
  return Quasipolynomial(std::move(out));
}

bool operator==(const Quasipolynomial& a, const Quasipolynomial& b) {
  const std::int64_t l = std::lcm(a.period(), b.period());
  for (std::int64_t r = 0; r < l; ++r) {
    if (!(a.constituent(r) == b.constituent(r))) return false;
  }
  return true;
}

std::string Quasipolynomial::serialize() const {
  const int d = std::max(degree(), 0);
  std::string out = "period " + std::to_string(period());
  for (std::int64_t r = 0; r < period(); ++r) {
    out += "; residue " + std::to_string(r) + ": [";
    for (int i = 0; i <= d; ++i) {
      if (i) out += ", ";
      out += iop::to_string(coefficient(r, i));
    }
    out += "]";
  }
  return out;
}

Quasipolynomial Quasipolynomial::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad quasipolynomial '" + std::string(text) + "': " + why);
  };
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (parts.empty() || parts[0].substr(0, 7) != "period ") fail("missing period");
  const std::int64_t p = std::stoll(std::string(parts[0].substr(7)));
  if (p < 1 || static_cast<std::int64_t>(parts.size()) != p + 1) fail("residue count mismatch");
  std::vector<Polynomial> cs(static_cast<std::size_t>(p));
  std::vector<bool> seen(static_cast<std::size_t>(p), false);
  for (std::size_t k = 1; k < parts.size(); ++k) {
    std::string_view s = parts[k];
    if (s.substr(0, 8) != "residue ") fail("expected residue");
    const auto colon = s.find(':');
    if (colon == std::string_view::npos) fail("missing ':'");
    const std::int64_t r = std::stoll(std::string(s.substr(8, colon - 8)));
    if (r < 0 || r >= p || seen[static_cast<std::size_t>(r)]) fail("bad residue index");
    seen[static_cast<std::size_t>(r)] = true;
    std::string_view list = trim(s.substr(colon + 1));
    if (list.size() < 2 || list.front() != '[' || list.back() != ']') fail("expected [..]");
    list = list.substr(1, list.size() - 2);
    std::vector<Rational> coeffs;
    std::size_t b = 0;
    for (std::size_t i = 0; i <= list.size(); ++i) {
      if (i == list.size() || list[i] == ',') {
        coeffs.push_back(parse_rational(trim(list.substr(b, i - b))));
        b = i + 1;
      }
    }
    cs[static_cast<std::size_t>(r)] = Polynomial(std::move(coeffs));
  }
  return Quasipolynomial(std::move(cs));
}

std::string Quasipolynomial::to_string(const std::string& var) const {
  if (period() == 1) return constituents_[0].to_string(var);
  std::string out;
  for (std::int64_t r = 0; r < period(); ++r) {
    if (r) out += "; ";
    out += var + " = " + std::to_string(r) + " mod " + std::to_string(period()) + ": " +
           constituents_[static_cast<std::size_t>(r)].to_string(var);
  }
  return out;
}

std::int64_t least_positive_representative(std::int64_t r, std::int64_t p) {
  const std::int64_t m = mod(r, p);
  return m == 0 ? p : m;
}

Quasipolynomial interpolate(const std::function<std::int64_t(std::int64_t)>& f, int degree_bound,
                            std::int64_t period_bound) {
  if (degree_bound < 0 || period_bound < 1) throw std::invalid_argument("bad interpolation bounds");
  const Eigen::Index n = degree_bound + 1;
  std::vector<Polynomial> cs;
  for (std::int64_t r = 0; r < period_bound; ++r) {
    const std::int64_t r0 = least_positive_representative(r, period_bound);
    RationalMatrix v(n, n);
    RationalVector y(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      const std::int64_t t = r0 + k * period_bound;
      Rational power = 1;
      for (Eigen::Index i = 0; i < n; ++i) {
        v(k, i) = power;
        power *= t;
      }
      y(k) = f(t);
    }
    const auto sol = solve_affine(v, y);
    std::vector<Rational> coeffs(sol.base.data(), sol.base.data() + sol.base.size());
    cs.emplace_back(std::move(coeffs));
  }
  return Quasipolynomial(std::move(cs));
}

Quasipolynomial reciprocal(const Quasipolynomial& q, int dim) {
  std::vector<Polynomial> cs;
  const Rational sign = dim % 2 ? -1 : 1;
  for (std::int64_t r = 0; r < q.period(); ++r) cs.push_back(q.constituent(-r).reflected() * sign);
  return Quasipolynomial(std::move(cs));
}

}  // namespace iop
