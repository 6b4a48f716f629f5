#include "fusionfact/cochain.hpp"

#include <charconv>
#include <limits>
#include <map>
#include <numeric>

namespace fusionfact {

namespace {

constexpr auto kInt64Max = std::numeric_limits<std::int64_t>::max();

std::size_t checked_power(std::size_t n, std::size_t k, std::size_t bound) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > bound / std::max<std::size_t>(n, 1)) throw Error(ErrorCode::TooLarge, "cochain table too large", {n, k});
    r *= n;
  }
  return r;
}

}  // namespace

CircleValue::CircleValue(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw Error(ErrorCode::MalformedInput, "denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const auto g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

CircleValue CircleValue::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw Error(ErrorCode::MalformedInput, "bad rational '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return CircleValue(parse_int(text), 1);
  return CircleValue(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string CircleValue::to_string() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

CircleValue operator+(CircleValue a, CircleValue b) {
  const auto g = std::gcd(a.den_, b.den_);
  const __int128 den = static_cast<__int128>(a.den_ / g) * b.den_;
  if (den > kInt64Max) throw Error(ErrorCode::CoefficientOverflow, "denominator overflow");
  const __int128 num = static_cast<__int128>(a.num_) * (b.den_ / g) + static_cast<__int128>(b.num_) * (a.den_ / g);
  const auto d = static_cast<std::int64_t>(den);
  return CircleValue(static_cast<std::int64_t>(num % den), d);
}

CircleValue operator-(CircleValue a) { return CircleValue(a.den_ - a.num_, a.den_); }
CircleValue operator-(CircleValue a, CircleValue b) { return a + (-b); }

Cochain::Cochain(FiniteGroup group, std::size_t degree) : group_(std::move(group)), degree_(degree) {
  if (degree > kMaxCochainDegree) throw Error(ErrorCode::DegreeUnsupported, "cochain degree too large", {degree});
  values_.resize(checked_power(group_.order(), degree, kMaxCochainEntries));
}

std::size_t Cochain::index(std::span<const Element> args) const {
  if (args.size() != degree_) throw Error(ErrorCode::MalformedInput, "wrong number of cochain arguments");
  std::size_t flat = 0;
  for (auto g : args) {
    if (g >= group_.order()) throw Error(ErrorCode::IndexOutOfRange, "cochain argument outside the group", {g});
    flat = flat * group_.order() + g;
  }
  return flat;
}

std::vector<Element> Cochain::tuple(std::size_t flat) const {
  std::vector<Element> t(degree_);
  for (std::size_t i = degree_; i-- > 0;) {
    t[i] = static_cast<Element>(flat % group_.order());
    flat /= group_.order();
  }
  return t;
}

bool Cochain::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](CircleValue v) { return v.is_zero(); });
}

bool Cochain::is_normalized() const {
  for (std::size_t flat = 0; flat < values_.size(); ++flat) {
    if (values_[flat].is_zero()) continue;
    const auto t = tuple(flat);
    if (std::find(t.begin(), t.end(), FiniteGroup::identity()) != t.end()) return false;
  }
  return true;
}

std::int64_t Cochain::common_denominator() const {
  std::int64_t l = 1;
  for (auto v : values_) {
    const __int128 next = static_cast<__int128>(l / std::gcd(l, v.den())) * v.den();
    if (next > kInt64Max) throw Error(ErrorCode::CoefficientOverflow, "common denominator overflow");
    l = static_cast<std::int64_t>(next);
  }
  return l;
}

namespace {

void require_compatible(const Cochain& a, const Cochain& b) {
  if (a.degree() != b.degree() || !(a.group() == b.group()))
    throw Error(ErrorCode::MalformedInput, "cochains live on different groups or degrees");
}

}  // namespace

Cochain operator+(const Cochain& a, const Cochain& b) {
  require_compatible(a, b);
  Cochain r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Cochain operator-(const Cochain& a, const Cochain& b) {
  require_compatible(a, b);
  Cochain r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

bool operator==(const Cochain& a, const Cochain& b) {
  return a.degree() == b.degree() && a.group() == b.group() && a.values() == b.values();
}

namespace {

// Calls emit(column, sign) for each term of (d f)(row tuple) with f of degree k.
template <typename Emit>
void bar_terms(const FiniteGroup& g, std::size_t k, const std::vector<Element>& t, Emit&& emit) {
  const auto n = g.order();
  auto flat_of = [&](auto&& get, std::size_t len) {
    std::size_t flat = 0;
    for (std::size_t i = 0; i < len; ++i) flat = flat * n + get(i);
    return flat;
  };
  emit(flat_of([&](std::size_t i) { return t[i + 1]; }, k), 1);
  for (std::size_t i = 1; i <= k; ++i) {
    auto get = [&](std::size_t p) -> std::size_t {
      if (p + 1 < i) return t[p];
      if (p + 1 == i) return g.mul(t[p], t[p + 1]);
      return t[p + 1];
    };
    emit(flat_of(get, k), i % 2 ? -1 : 1);
  }
  emit(flat_of([&](std::size_t i) { return t[i]; }, k), (k + 1) % 2 ? -1 : 1);
}

Cochain coboundary_unchecked(const Cochain& f) {
  const auto k = f.degree();
  if (k > 4) throw Error(ErrorCode::DegreeUnsupported, "coboundary supports degrees up to 4", {k});
  Cochain df(f.group(), k + 1);
  for (std::size_t flat = 0; flat < df.size(); ++flat) {
    CircleValue acc;
    bar_terms(f.group(), k, df.tuple(flat), [&](std::size_t col, int sign) {
      if (sign > 0) acc += f[col];
      else acc -= f[col];
    });
    df[flat] = acc;
  }
  return df;
}

Cochain restrict_unchecked(const Cochain& f, const Subgroup& l, const FiniteGroup& lg) {
  Cochain r(lg, f.degree());
  std::vector<Element> args(f.degree());
  for (std::size_t flat = 0; flat < r.size(); ++flat) {
    const auto t = r.tuple(flat);
    for (std::size_t i = 0; i < t.size(); ++i) args[i] = l.elements()[t[i]];
    r[flat] = f.at(args);
  }
  return r;
}

}  // namespace

Cochain coboundary(const Cochain& f) {
  auto df = coboundary_unchecked(f);
#ifndef NDEBUG
  if (df.degree() <= 4 && df.size() * f.group().order() <= 1'000'000 && !coboundary_unchecked(df).is_zero())
    invariant_failure("d(df) is nonzero");
#endif
  return df;
}

std::optional<std::vector<Element>> cocycle_defect(const Cochain& omega) {
  const auto d = coboundary_unchecked(omega);
  for (std::size_t flat = 0; flat < d.size(); ++flat)
    if (!d[flat].is_zero()) return d.tuple(flat);
  return std::nullopt;
}

bool is_cocycle(const Cochain& omega) { return !cocycle_defect(omega).has_value(); }

Cochain cyclic_3cocycle(std::size_t n, std::size_t q) {
  if (n == 0 || q >= n) throw Error(ErrorCode::MalformedInput, "cyclic 3-cocycle needs 0 <= q < n", {n, q});
  Cochain w(cyclic_group(n), 3);
  for (std::size_t flat = 0; flat < w.size(); ++flat) {
    const auto t = w.tuple(flat);
    const auto carry = (t[1] + t[2]) / n;
    w[flat] = CircleValue(static_cast<std::int64_t>(q * t[0] * carry), static_cast<std::int64_t>(n));
  }
  if (!is_cocycle(w)) invariant_failure("cyclic 3-cocycle formula is not a cocycle", {n, q});
  return w;
}

Cochain restrict_cochain(const Cochain& f, const Subgroup& l) {
  for (auto e : l.elements())
    if (e >= f.group().order()) throw Error(ErrorCode::IndexOutOfRange, "subgroup element outside the group", {e});
  const auto lg = l.as_group(f.group());
  auto r = restrict_unchecked(f, l, lg);
  if (f.degree() <= 4 && f.size() * f.group().order() <= 100'000) {
    if (!(restrict_unchecked(coboundary_unchecked(f), l, lg) == coboundary_unchecked(r)))
      invariant_failure("restriction does not commute with d");
  }
  return r;
}

DenseMatrix coboundary_matrix(const FiniteGroup& g, std::size_t k) {
  if (k > 4) throw Error(ErrorCode::DegreeUnsupported, "coboundary supports degrees up to 4", {k});
  const auto cols = checked_power(g.order(), k, kMaxCochainEntries);
  const auto rows = checked_power(g.order(), k + 1, kMaxCochainEntries);
  if (rows > 20'000'000 / cols) throw Error(ErrorCode::TooLarge, "coboundary matrix too large", {rows, cols});
  DenseMatrix d(rows, cols);
  std::vector<Element> t(k + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = k + 1, x = r; i-- > 0; x /= g.order()) t[i] = static_cast<Element>(x % g.order());
    bar_terms(g, k, t, [&](std::size_t col, int sign) { d(r, col) += sign; });
  }
  return d;
}

TrivializeResult trivialize(const Cochain& omega, std::optional<std::int64_t> modulus) {
  const auto k = omega.degree();
  if (k == 0) throw Error(ErrorCode::MalformedInput, "cannot trivialize a 0-cochain");
  if (auto defect = cocycle_defect(omega)) {
    std::vector<std::size_t> w(defect->begin(), defect->end());
    throw Error(ErrorCode::NotACocycle, "input is not a cocycle", std::move(w));
  }
  const auto den = omega.common_denominator();
  const auto order = static_cast<std::int64_t>(omega.group().order());
  std::int64_t m;
  if (modulus) {
    m = *modulus;
    if (m < 1 || m % den != 0)
      throw Error(ErrorCode::MalformedInput, "modulus must be a multiple of every denominator");
  } else {
    if (den > kMaxModulus / order) throw Error(ErrorCode::CoefficientOverflow, "coefficient modulus too large");
    m = den * order;
  }
  if (m > kMaxModulus) throw Error(ErrorCode::CoefficientOverflow, "coefficient modulus too large");

  auto a = coboundary_matrix(omega.group(), k - 1);
  std::vector<std::int64_t> b(omega.size());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = omega[i].num() * (m / omega[i].den());
  auto smith = modular_smith(std::move(a), m, std::move(b));

  TrivializeResult result;
  result.modulus = m;
  result.rank = static_cast<std::size_t>(
      std::count_if(smith.diagonal.begin(), smith.diagonal.end(), [](std::int64_t s) { return s != 0; }));
  result.obstruction = smith.obstruction;
  if (!smith.solution) return result;

  Cochain psi(omega.group(), k - 1);
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = CircleValue((*smith.solution)[i], m);
  if (k == 3 && omega.is_normalized()) {
    const Element ee[] = {FiniteGroup::identity(), FiniteGroup::identity()};
    const auto c = psi.at(ee);
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] -= c;
    if (!psi.is_normalized()) invariant_failure("witness could not be normalized");
  }
  if (!(coboundary_unchecked(psi) == omega)) invariant_failure("trivializing witness fails d(psi) = omega");
  result.witness = std::move(psi);
  return result;
}

std::uint64_t brute_classes(const FiniteGroup& l, std::size_t k, std::int64_t m) {
  if (m < 1) throw Error(ErrorCode::MalformedInput, "modulus must be positive");
  const auto entries = checked_power(l.order(), k, 100'000);
  if (entries > 100'000 / static_cast<std::size_t>(m))
    throw Error(ErrorCode::TooLarge, "cochain space too large for brute force", {entries, static_cast<std::size_t>(m)});

  std::map<std::int64_t, std::int64_t> exps;
  for (auto [p, e] : factorize_integer(m)) exps[p] += static_cast<std::int64_t>(e * entries);
  auto subtract_image = [&](std::size_t degree) {
    for (auto [p, e] : modular_smith(coboundary_matrix(l, degree), m).image_order())
      exps[p] -= static_cast<std::int64_t>(e);
  };
  subtract_image(k);
  if (k >= 1) subtract_image(k - 1);

  std::uint64_t count = 1;
  for (auto [p, e] : exps) {
    if (e < 0) invariant_failure("cocycle count below coboundary count");
    for (std::int64_t i = 0; i < e; ++i) {
      if (count > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(p))
        throw Error(ErrorCode::TooLarge, "class count overflows");
      count *= static_cast<std::uint64_t>(p);
    }
  }
  return count;
}

}  // namespace fusionfact
