#include "addcomb/group.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "addcomb/errors.hpp"
#include "addcomb/limits.hpp"

namespace addcomb {

FiniteAbelianGroup FiniteAbelianGroup::cyclic(std::size_t n) {
  if (n < 1) throw InvalidInput("cyclic group order must be >= 1");
  check_guard(n, limits().max_table, "group order");
  return {Type::cyclic, n, n};
}

FiniteAbelianGroup FiniteAbelianGroup::cube(unsigned n) {
  if (n < 1 || n > 30) throw InvalidInput("boolean cube dimension must be in 1..30");
  check_guard(std::size_t{1} << n, limits().max_table, "group order");
  return {Type::cube, n, std::size_t{1} << n};
}

std::string FiniteAbelianGroup::describe() const {
  return (type_ == Type::cyclic ? "cyclic " : "cube ") + std::to_string(param_);
}

GaussianRational pow(const GaussianRational& z, unsigned k) {
  GaussianRational out{1, 0};
  GaussianRational base = z;
  while (k) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return out;
}

GroupFunction::GroupFunction(FiniteAbelianGroup g) : group(g), values(g.order()) {}

GroupFunction::GroupFunction(FiniteAbelianGroup g, std::vector<GaussianRational> v) : group(g), values(std::move(v)) {
  if (values.size() != group.order()) throw InvalidInput("group function length does not match group order");
}

GroupFunction GroupFunction::real(FiniteAbelianGroup g, const std::vector<Rational>& v) {
  if (v.size() != g.order()) throw InvalidInput("group function length does not match group order");
  GroupFunction f(g);
  for (std::size_t i = 0; i < v.size(); ++i) f.values[i].re = v[i];
  return f;
}

GroupFunction GroupFunction::indicator(FiniteAbelianGroup g, const std::vector<std::size_t>& support) {
  GroupFunction f(g);
  for (auto x : support) {
    if (x >= g.order()) throw InvalidInput("indicator support outside the group");
    f.values[x].re = 1;
  }
  return f;
}

bool GroupFunction::is_real() const {
  return std::all_of(values.begin(), values.end(), [](const auto& z) { return z.is_real(); });
}

bool GroupFunction::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const auto& z) { return z.is_zero(); });
}

GroupFunction GroupFunction::abs_real() const {
  if (!is_real()) throw InvalidInput("abs_real: function is not real");
  GroupFunction out = *this;
  for (auto& z : out.values) z.re = abs(z.re);
  return out;
}

GroupFunction operator+(const GroupFunction& f, const GroupFunction& g) {
  if (!(f.group == g.group)) throw InvalidInput("functions live on different groups");
  GroupFunction out(f.group);
  for (std::size_t i = 0; i < f.size(); ++i) out.values[i] = f.values[i] + g.values[i];
  return out;
}

namespace {

void same_group(const GroupFunction& f, const GroupFunction& g) {
  if (!(f.group == g.group)) throw InvalidInput("functions live on different groups");
}

std::vector<std::size_t> support_of(const GroupFunction& f) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!f.values[i].is_zero()) s.push_back(i);
  return s;
}

}  // namespace

GroupFunction correlate(const GroupFunction& f, const GroupFunction& g) {
  same_group(f, g);
  const auto& G = f.group;
  GroupFunction out(G);
  const auto sf = support_of(f), sg = support_of(g);
  for (auto y : sf)
    for (auto w : sg) out.values[G.sub(w, y)] += f.values[y] * g.values[w];
  return out;
}

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
  same_group(f, g);
  const auto& G = f.group;
  GroupFunction out(G);
  const auto sf = support_of(f), sg = support_of(g);
  for (auto y : sf)
    for (auto w : sg) out.values[G.add(y, w)] += f.values[y] * g.values[w];
  return out;
}

GroupFunction conjugate(const GroupFunction& f) {
  GroupFunction out = f;
  for (auto& z : out.values) z.im = -z.im;
  return out;
}

namespace {

using cld = std::complex<long double>;

cld to_complex(const GaussianRational& z) {
  return {static_cast<long double>(z.re.get_d()), static_cast<long double>(z.im.get_d())};
}

/// e(sign·ξ·x) for the group's pairing.
class Characters {
 public:
  Characters(const FiniteAbelianGroup& g, int sign) : g_(g) {
    if (g.type() == FiniteAbelianGroup::Type::cyclic) {
      roots_.resize(g.order());
      const long double two_pi = 2 * std::numbers::pi_v<long double>;
      for (std::size_t j = 0; j < g.order(); ++j)
        roots_[j] = std::polar<long double>(1.0L, sign * two_pi * static_cast<long double>(j) / g.order());
    }
  }
  cld operator()(std::size_t xi, std::size_t x) const {
    if (g_.type() == FiniteAbelianGroup::Type::cube) return std::popcount(xi & x) % 2 ? -1.0L : 1.0L;
    const auto prod = static_cast<unsigned __int128>(xi) * x % g_.order();
    return roots_[static_cast<std::size_t>(prod)];
  }

 private:
  FiniteAbelianGroup g_;
  std::vector<cld> roots_;
};

Spectrum transform(const FiniteAbelianGroup& g, const Spectrum& in, int sign) {
  const std::size_t n = g.order();
  check_pairs(n, n, "dense DFT");
  Characters chi(g, sign);
  Spectrum out(n);
  for (std::size_t xi = 0; xi < n; ++xi) {
    cld acc = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (in[x] != cld(0)) acc += in[x] * chi(xi, x);
    out[xi] = acc;
  }
  return out;
}

Spectrum to_spectrum(const GroupFunction& f) {
  Spectrum v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = to_complex(f.values[i]);
  return v;
}

long double rel(long double a, long double b) {
  const long double scale = std::max({std::fabs(a), std::fabs(b), 1e-300L});
  return std::fabs(a - b) / scale;
}

}  // namespace

Spectrum dft(const GroupFunction& f) { return transform(f.group, to_spectrum(f), -1); }

Spectrum inverse_dft(const FiniteAbelianGroup& g, const Spectrum& fhat) {
  Spectrum out = transform(g, fhat, +1);
  for (auto& z : out) z /= static_cast<long double>(g.order());
  return out;
}

std::vector<GaussianRational> walsh(const GroupFunction& f) {
  if (f.group.type() != FiniteAbelianGroup::Type::cube) throw InvalidInput("walsh: boolean cube required");
  const std::size_t n = f.size();
  std::vector<GaussianRational> out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t x = 0; x < n; ++x) {
      if (f.values[x].is_zero()) continue;
      if (std::popcount(r & x) % 2)
        out[r] = out[r] - f.values[x];
      else
        out[r] += f.values[x];
    }
  return out;
}

long double FourierCheck::worst() const {
  return std::max({parseval, convolution_l2, inversion, conv_theorem, corr_theorem});
}

FourierCheck fourier_identities(const GroupFunction& f, const GroupFunction& g) {
  same_group(f, g);
  const auto& G = f.group;
  const long double N = static_cast<long double>(G.order());
  const Spectrum fh = dft(f), gh = dft(g);
  FourierCheck out;

  Rational l2 = 0;
  for (const auto& z : f.values) l2 += z.norm2();
  long double spec = 0;
  for (const auto& z : fh) spec += std::norm(z);
  out.parseval = rel(static_cast<long double>(l2.get_d()), spec / N);

  const GroupFunction fg = convolve(f, g);
  Rational conv_l2 = 0;
  for (const auto& z : fg.values) conv_l2 += z.norm2();
  long double spec2 = 0;
  for (std::size_t i = 0; i < fh.size(); ++i) spec2 += std::norm(fh[i]) * std::norm(gh[i]);
  out.convolution_l2 = rel(static_cast<long double>(conv_l2.get_d()), spec2 / N);

  const Spectrum back = inverse_dft(G, fh);
  long double worst = 0, peak = 1e-300L;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const cld exact = to_complex(f.values[i]);
    worst = std::max(worst, std::abs(exact - back[i]));
    peak = std::max(peak, std::abs(exact));
  }
  out.inversion = worst / peak;

  // Pointwise transform identities, relative to the largest coefficient.
  auto pointwise = [](const Spectrum& lhs, const Spectrum& rhs) {
    long double w = 0, p = 1e-300L;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      w = std::max(w, std::abs(lhs[i] - rhs[i]));
      p = std::max({p, std::abs(lhs[i]), std::abs(rhs[i])});
    }
    return w / p;
  };
  Spectrum prod(fh.size());
  for (std::size_t i = 0; i < fh.size(); ++i) prod[i] = fh[i] * gh[i];
  out.conv_theorem = pointwise(dft(fg), prod);

  const Spectrum fbar_hat = dft(conjugate(f));
  for (std::size_t i = 0; i < fh.size(); ++i) prod[i] = std::conj(fbar_hat[i]) * gh[i];
  out.corr_theorem = pointwise(dft(correlate(f, g)), prod);
  return out;
}

GroupFunction read_group_function(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++lineno;
      const auto hash = out.find('#');
      if (hash != std::string::npos) out.erase(hash);
      if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line(line)) throw ParseError(lineno + 1, "missing group header");
  std::istringstream head(line);
  std::string word, type;
  long long param = 0;
  if (!(head >> word >> type >> param) || word != "group" || (type != "cyclic" && type != "cube") || param < 1)
    throw ParseError(lineno, "expected 'group cyclic n' or 'group cube n'");
  std::string extra;
  if (head >> extra) throw ParseError(lineno, "trailing text after group header");
  const FiniteAbelianGroup G = type == "cyclic" ? FiniteAbelianGroup::cyclic(static_cast<std::size_t>(param))
                                                : FiniteAbelianGroup::cube(static_cast<unsigned>(param));
  GroupFunction f(G);
  for (std::size_t i = 0; i < G.order(); ++i) {
    if (!next_line(line)) throw ParseError(lineno + 1, "expected " + std::to_string(G.order()) + " value lines");
    std::istringstream row(line);
    std::string re, im;
    if (!(row >> re >> im) || (row >> extra)) throw ParseError(lineno, "expected 're im'");
    try {
      f.values[i] = {parse_rational(re), parse_rational(im)};
    } catch (const ParseError&) {
      throw;
    } catch (const InvalidInput& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (next_line(line)) throw ParseError(lineno, "unexpected extra value line");
  return f;
}

void write_group_function(std::ostream& out, const GroupFunction& f) {
  out << "group " << f.group.describe() << '\n';
  for (const auto& z : f.values) out << to_string(z.re) << ' ' << to_string(z.im) << '\n';
}

}  // namespace addcomb
