#include "symbreak/johnson.hpp"

#include <bit>
#include <stdexcept>

#include "symbreak/autsearch.hpp"
#include "symbreak/error.hpp"

namespace symbreak {

namespace {

std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * static_cast<std::uint64_t>(n - k + j) / j;
  return r;
}

std::string params_text(const JohnsonParams& p) {
  return "(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.i) + ")";
}

bool half_case(const JohnsonParams& p) { return 2 * p.k == p.n; }

void check_buildable(const JohnsonParams& p) {
  validate(p);
  if (choose(p.n, p.k) > static_cast<std::uint64_t>(Graph::kMaxVertices) || p.n > 63) {
    throw Error(ErrorKind::kOutOfRange,
                "J" + params_text(p) + " has more than " + std::to_string(Graph::kMaxVertices) +
                    " vertices");
  }
}

Permutation vertex_map(const std::vector<Subset>& verts, auto&& image_of) {
  std::vector<std::uint8_t> img(verts.size());
  for (std::size_t v = 0; v < verts.size(); ++v) {
    img[v] = static_cast<std::uint8_t>(colex_rank(image_of(verts[v])));
  }
  return Permutation(std::move(img));
}

Subset apply(const Permutation& sigma, Subset s) {
  Subset out = 0;
  for (; s != 0; s &= s - 1) out |= Subset{1} << sigma[std::countr_zero(s)];
  return out;
}

}  // namespace

void validate(const JohnsonParams& p) {
  if (p.k < 1 || 2 * p.k > p.n || p.i < 1 || p.i > p.k) {
    throw Error(ErrorKind::kInvalidParams,
                "Johnson parameters " + params_text(p) + " need 2 <= 2k <= n and 1 <= i <= k");
  }
}

Subset make_subset(std::initializer_list<int> elements) {
  Subset s = 0;
  for (int e : elements) {
    if (e < 1 || e > 64) throw Error(ErrorKind::kOutOfRange, "subset element outside 1..64");
    s |= Subset{1} << (e - 1);
  }
  return s;
}

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  for (; s != 0; s &= s - 1) out.push_back(std::countr_zero(s) + 1);
  return out;
}

std::string subset_to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : subset_elements(s)) {
    out += (first ? "" : ",") + std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::vector<Subset> k_subsets_colex(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n || n > 63) return out;
  if (k == 0) return {0};
  // Gosper's hack walks the k-bit masks in increasing order.
  Subset s = (Subset{1} << k) - 1;
  const Subset limit = Subset{1} << n;
  while (s < limit) {
    out.push_back(s);
    const Subset c = s & (~s + 1);
    const Subset r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

int colex_rank(Subset s) {
  std::uint64_t rank = 0;
  int j = 1;
  for (; s != 0; s &= s - 1, ++j) rank += choose(std::countr_zero(s), j);
  return static_cast<int>(rank);
}

Graph generalized_johnson(const JohnsonParams& p) {
  check_buildable(p);
  const auto verts = k_subsets_colex(p.n, p.k);
  const int m = static_cast<int>(verts.size());
  EdgeList e;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (std::popcount(verts[a] & verts[b]) == p.k - p.i) e.push_back({a, b});
  return Graph(m, e, "johnson " + std::to_string(p.n) + " " + std::to_string(p.k) + " " +
                         std::to_string(p.i));
}

Graph kneser(int n, int k) {
  return generalized_johnson({n, k, k}).with_name("kneser " + std::to_string(n) + " " +
                                                  std::to_string(k));
}

BigInt johnson_theta(const JohnsonParams& p) {
  validate(p);
  const BigInt total = binomial(p.n, p.k);
  if (p.k == 1) return total;
  if (half_case(p) && (p.i == p.k || 2 * p.i == p.k)) return total;
  return total - binomial(p.n - 2, p.k - 1) + 1;
}

BigInt johnson_D(const JohnsonParams& p) {
  validate(p);
  if (p.k == 1) return p.n;
  if (p.n == 5 && p.k == 2) return 3;
  if (!half_case(p)) return 2;
  if (p.i != p.k && 2 * p.i != p.k) return 2;
  if (2 * p.i == p.k) return 3;
  // Smallest d with d(d-1) >= 2e, i.e. the ceiling of (1 + sqrt(1 + 8e)) / 2.
  const BigInt e = binomial(p.n, p.k) / 2;
  const BigInt disc = 1 + 8 * e;
  const BigInt r = isqrt(disc);
  BigInt d = (1 + r) / 2;
  while (d * (d - 1) < 2 * e) ++d;
  while (d > 1 && (d - 1) * (d - 2) >= 2 * e) --d;
  return d;
}

char aut_order_case(const JohnsonParams& p) {
  validate(p);
  if (p.k == 1) return '-';
  if (2 * p.k < p.n - 1) return 'a';
  if (2 * p.k == p.n - 1) return 2 * p.i == p.k + 1 ? 'c' : 'b';
  if (p.k == 2) return 'd';
  if (p.i == p.k) return 'g';
  if (2 * p.i == p.k) return 'f';
  return 'e';
}

BigInt johnson_aut_order(const JohnsonParams& p) {
  const char c = aut_order_case(p);
  const BigInt e = binomial(p.n, p.k) / 2;
  const unsigned ue = static_cast<unsigned>(e);
  switch (c) {
    case '-':
    case 'a':
    case 'b': return factorial(p.n);
    case 'c': return factorial(p.n + 1);
    case 'd': return 48;
    case 'e': return 2 * factorial(p.n);
    case 'f': return boost::multiprecision::pow(BigInt(2), ue) * factorial(p.n);
    case 'g': return boost::multiprecision::pow(BigInt(2), ue) * factorial(static_cast<std::uint64_t>(e));
  }
  throw std::logic_error("unreachable automorphism case");
}

Permutation natural_automorphism(const Permutation& beta, const JohnsonParams& p) {
  check_buildable(p);
  if (beta.degree() != p.n) {
    throw Error(ErrorKind::kDegreeError, "permutation degree must equal n");
  }
  return vertex_map(k_subsets_colex(p.n, p.k), [&](Subset s) { return apply(beta, s); });
}

Subset sym_np1_image(const Permutation& sigma, Subset x, const JohnsonParams& p) {
  validate(p);
  if (2 * p.k != p.n - 1 || 2 * p.i != p.k + 1) {
    throw Error(ErrorKind::kNotApplicable,
                "Sym(n+1) action needs k = (n-1)/2 and i = (k+1)/2, got " + params_text(p));
  }
  if (sigma.degree() != p.n + 1) {
    throw Error(ErrorKind::kDegreeError, "sigma must act on n+1 points");
  }
  if (std::popcount(x) != p.k || (p.n < 64 && (x >> p.n) != 0)) {
    throw Error(ErrorKind::kInvalidParams, "X must be a k-subset of {1..n}");
  }
  const Subset inf = Subset{1} << p.n;
  const Subset all = (inf << 1) - 1;
  const Subset p1 = apply(sigma, x | inf);
  const Subset moved = (p1 & inf) ? p1 : apply(sigma, all & ~(x | inf));
  return moved & ~inf;
}

Permutation sym_np1_automorphism(const Permutation& sigma, const JohnsonParams& p) {
  check_buildable(p);
  const Graph g = generalized_johnson(p);
  Permutation m = vertex_map(k_subsets_colex(p.n, p.k),
                             [&](Subset s) { return sym_np1_image(sigma, s, p); });
  if (!is_automorphism(g, m.images())) throw std::logic_error("induced map is not an automorphism");
  return m;
}

}  // namespace symbreak
