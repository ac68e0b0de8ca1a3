// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference evaluation on finite-dimensional algebras. Nothing
// here uses the library: algebras are hand-written structure constants,
// jobs are read straight from their JSON, and every law is evaluated on the
// whole basis with plain rationals.

#pragma once

#include <gmpxx.h>

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace oracle {

using Q = mpq_class;
using nlohmann::json;

template <class K>
using Sparse = std::map<K, Q>;

template <class K>
void add(Sparse<K>& v, const K& k, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = v.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

template <class K>
Sparse<K> combine(const Sparse<K>& a, const Sparse<K>& b, const Q& sb = 1) {
  Sparse<K> out = a;
  for (const auto& [k, c] : b) add(out, k, c * sb);
  return out;
}

inline Q parse_q(const std::string& s) {
  Q q(s);
  q.canonicalize();
  return q;
}

// Row echelon form keyed on the largest key of each row. reduce() is the
// linear projection onto the span of non-pivot keys.
template <class K>
class Echelon {
 public:
  Sparse<K> reduce(Sparse<K> v) const {
    Sparse<K> out;
    while (!v.empty()) {
      auto it = std::prev(v.end());
      const K k = it->first;
      const Q c = it->second;
      v.erase(it);
      auto row = rows_.find(k);
      if (row == rows_.end()) {
        out.emplace(k, c);
        continue;
      }
      for (const auto& [kk, cc] : row->second)
        if (kk != k) add(v, kk, -c * cc);
    }
    return out;
  }
  bool insert(const Sparse<K>& v) {
    Sparse<K> r = reduce(v);
    if (r.empty()) return false;
    const Q lead = std::prev(r.end())->second;
    for (auto& [k, c] : r) c /= lead;
    rows_.emplace(std::prev(r.end())->first, std::move(r));
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<K, Sparse<K>> rows_;
};

using Vec = Sparse<int>;
using Key3 = std::array<int, 3>;
using Ten3 = Sparse<Key3>;

// Finite-dimensional algebra by structure constants.
struct Model {
  std::string name;
  std::vector<std::string> labels;
  std::function<Vec(int, int)> product;
  std::map<std::string, Vec> generators;
  // Basis element i as a word in generator names, matching normal forms.
  std::vector<std::vector<std::string>> words;
  bool commutative = false;
  // Optional bracket on basis elements.
  std::function<Vec(int, int)> bracket;

  int dim() const { return static_cast<int>(labels.size()); }
  Vec one() const { return Vec{{0, 1}}; }
  Vec basis(int i) const { return Vec{{i, 1}}; }

  Vec mul(const Vec& a, const Vec& b) const {
    Vec out;
    for (const auto& [i, ci] : a)
      for (const auto& [j, cj] : b)
        for (const auto& [k, ck] : product(i, j)) add(out, k, ci * cj * ck);
    return out;
  }
  Vec br(const Vec& a, const Vec& b) const {
    Vec out;
    if (!bracket) return out;
    for (const auto& [i, ci] : a)
      for (const auto& [j, cj] : b)
        for (const auto& [k, ck] : bracket(i, j)) add(out, k, ci * cj * ck);
    return out;
  }

  // Two-sided inverse by solving a * v = 1 over the basis, if one exists.
  std::optional<Vec> inverse(const Vec& a) const {
    const int n = dim();
    // Augmented columns: a * e_j for every j, solve sum x_j (a e_j) = 1.
    std::vector<std::vector<Q>> m(n, std::vector<Q>(n + 1));
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : mul(a, basis(j))) m[k][j] = c;
    m[0][n] = 1;
    int row = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < n && row < n; ++col) {
      int p = row;
      while (p < n && m[p][col] == 0) ++p;
      if (p == n) continue;
      std::swap(m[p], m[row]);
      const Q lead = m[row][col];
      for (auto& x : m[row]) x /= lead;
      for (int r = 0; r < n; ++r) {
        if (r == row || m[r][col] == 0) continue;
        const Q f = m[r][col];
        for (int c = 0; c <= n; ++c) m[r][c] -= f * m[row][c];
      }
      pivot_col.push_back(col);
      ++row;
    }
    for (int r = row; r < n; ++r)
      if (m[r][n] != 0) return std::nullopt;
    Vec v;
    for (int r = 0; r < row; ++r) add(v, pivot_col[r], m[r][n]);
    if (mul(v, a) != one()) return std::nullopt;
    return v;
  }

  Vec token(const std::string& t) const {
    if (t == "1") return one();
    if (auto it = generators.find(t); it != generators.end()) return it->second;
    const auto caret = t.rfind('^');
    if (caret == std::string::npos) throw std::runtime_error("oracle: unknown token " + t);
    const Vec base = token(t.substr(0, caret));
    const long e = std::stol(t.substr(caret + 1));
    Vec b = base;
    if (e < 0) {
      auto inv = inverse(base);
      if (!inv) throw std::runtime_error("oracle: no inverse for " + t);
      b = *inv;
    }
    Vec out = one();
    for (long i = 0; i < (e < 0 ? -e : e); ++i) out = mul(out, b);
    return out;
  }
  Vec word(const json& w) const {
    Vec out = one();
    for (const auto& t : w) out = mul(out, token(t.get<std::string>()));
    return out;
  }
  Vec element(const json& terms) const {
    Vec out;
    for (const auto& term : terms) {
      const Q c = term.contains("coeff") ? parse_q(term["coeff"].get<std::string>()) : Q(1);
      for (const auto& [k, v] : word(term["word"])) add(out, k, c * v);
    }
    return out;
  }
};

// Products in a tensor power, with op[i] marking opposite factors.
template <std::size_t N>
Sparse<std::array<int, N>> tmul(const Model& m, const std::array<bool, N>& op, const Sparse<std::array<int, N>>& a,
                                 const Sparse<std::array<int, N>>& b) {
  Sparse<std::array<int, N>> out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      std::vector<std::pair<std::array<int, N>, Q>> acc{{std::array<int, N>{}, ca * cb}};
      for (std::size_t i = 0; i < N; ++i) {
        const Vec p = op[i] ? m.product(kb[i], ka[i]) : m.product(ka[i], kb[i]);
        std::vector<std::pair<std::array<int, N>, Q>> next;
        for (const auto& [k, c] : acc)
          for (const auto& [idx, pc] : p) {
            auto kk = k;
            kk[i] = idx;
            next.emplace_back(kk, c * pc);
          }
        acc = std::move(next);
      }
      for (const auto& [k, c] : acc) add(out, k, c);
    }
  }
  return out;
}

inline constexpr std::array<bool, 3> kAlt3{false, true, false};

template <std::size_t N>
Sparse<std::array<int, N>> pure(const std::array<Vec, N>& f, const Q& c = 1) {
  std::vector<std::pair<std::array<int, N>, Q>> acc{{std::array<int, N>{}, c}};
  for (std::size_t i = 0; i < N; ++i) {
    std::vector<std::pair<std::array<int, N>, Q>> next;
    for (const auto& [k, cc] : acc)
      for (const auto& [idx, v] : f[i]) {
        auto kk = k;
        kk[i] = idx;
        next.emplace_back(kk, cc * v);
      }
    acc = std::move(next);
  }
  Sparse<std::array<int, N>> out;
  for (const auto& [k, v] : acc) add(out, k, v);
  return out;
}

inline Ten3 tensor3(const Model& m, const json& terms) {
  Ten3 out;
  for (const auto& term : terms) {
    const Q c = term.contains("coeff") ? parse_q(term["coeff"].get<std::string>()) : Q(1);
    const auto& f = term["factors"];
    for (const auto& [k, v] : pure<3>({m.word(f[0]), m.word(f[1]), m.word(f[2])}, c)) add(out, k, v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Models.

// H4 with basis g^a x^b at index a + 2b.
inline Model h4_model() {
  Model m;
  m.name = "H4";
  m.labels = {"1", "g", "x", "gx"};
  m.product = [](int i, int j) {
    const int a = i % 2, b = i / 2, c = j % 2, d = j / 2;
    if (b + d > 1) return Vec{};
    const Q sign = (b * c) % 2 ? -1 : 1;
    return Vec{{(a + c) % 2 + 2 * (b + d), sign}};
  };
  m.generators = {{"g", Vec{{1, 1}}}, {"x", Vec{{2, 1}}}};
  m.words = {{}, {"g"}, {"x"}, {"g", "x"}};
  return m;
}

inline Model z2_model() {
  Model m;
  m.name = "k[Z/2]";
  m.labels = {"1", "g"};
  m.product = [](int i, int j) { return Vec{{(i + j) % 2, 1}}; };
  m.generators = {{"g", Vec{{1, 1}}}};
  m.words = {{}, {"g"}};
  m.commutative = true;
  m.bracket = [](int, int) { return Vec{}; };
  return m;
}

// k[x, y] / (x, y)^3 with basis 1, x, y, x^2, xy, y^2 and the bracket
// {f, h} = sum_ij d_i f d_j h {x_i, x_j} from a table on x and y.
struct Mono {
  int i, j;
};
inline const std::vector<Mono>& truncated_monos() {
  static const std::vector<Mono> m = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  return m;
}
inline int mono_index(int i, int j) {
  const auto& ms = truncated_monos();
  for (std::size_t k = 0; k < ms.size(); ++k)
    if (ms[k].i == i && ms[k].j == j) return static_cast<int>(k);
  return -1;
}

// Polynomials without truncation, keyed on exponent pairs.
using Poly = Sparse<std::pair<int, int>>;
inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) add(out, {ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}
inline Poly poly_d(const Poly& p, int var) {
  Poly out;
  for (const auto& [k, c] : p) {
    const int e = var == 0 ? k.first : k.second;
    if (e == 0) continue;
    add(out, var == 0 ? std::make_pair(k.first - 1, k.second) : std::make_pair(k.first, k.second - 1), c * e);
  }
  return out;
}
inline Poly poly_bracket(const Poly& f, const Poly& h, const Poly& xy) {
  // {x, y} = xy, {y, x} = -xy.
  Poly out = poly_mul(poly_mul(poly_d(f, 0), poly_d(h, 1)), xy);
  for (const auto& [k, c] : poly_mul(poly_mul(poly_d(f, 1), poly_d(h, 0)), xy)) add(out, k, -c);
  return out;
}
inline Vec truncate(const Poly& p) {
  Vec out;
  for (const auto& [k, c] : p)
    if (k.first + k.second <= 2) add(out, mono_index(k.first, k.second), c);
  return out;
}
inline Poly mono_poly(int idx) {
  const Mono m = truncated_monos()[idx];
  return Poly{{{m.i, m.j}, 1}};
}

inline Model truncated_model(const Poly& xy_bracket) {
  Model m;
  m.name = "k[x,y]/(x,y)^3";
  m.labels = {"1", "x", "y", "x^2", "xy", "y^2"};
  m.product = [](int a, int b) {
    const Mono p = truncated_monos()[a], q = truncated_monos()[b];
    if (p.i + q.i + p.j + q.j > 2) return Vec{};
    return Vec{{mono_index(p.i + q.i, p.j + q.j), 1}};
  };
  m.generators = {{"x", Vec{{1, 1}}}, {"y", Vec{{2, 1}}}};
  m.words = {{}, {"x"}, {"y"}, {"x", "x"}, {"x", "y"}, {"y", "y"}};
  m.commutative = true;
  m.bracket = [xy_bracket](int a, int b) { return truncate(poly_bracket(mono_poly(a), mono_poly(b), xy_bracket)); };
  return m;
}

// The bracket descends to the quotient iff {generator, cubic monomial} stays
// in the ideal of degree >= 3.
inline bool truncation_ideal_is_poisson(const Poly& xy_bracket) {
  for (int g : {1, 2})
    for (const auto& cubic : {std::make_pair(3, 0), std::make_pair(2, 1), std::make_pair(1, 2), std::make_pair(0, 3)}) {
      const Poly b = poly_bracket(mono_poly(g), Poly{{cubic, 1}}, xy_bracket);
      for (const auto& [k, c] : b)
        if (k.first + k.second < 3) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Hopf-Galois laws.

struct HgVerdicts {
  bool algebra_map = true;
  bool left_unit = true;
  bool right_unit = true;
  bool coassociative = true;
  bool all() const { return algebra_map && left_unit && right_unit && coassociative; }
};

struct HgOracle {
  const Model& m;
  std::vector<Ten3> mu;  // on basis elements

  std::map<std::string, Ten3> images;

  HgOracle(const Model& model, std::map<std::string, Ten3> gen_images) : m(model), images(std::move(gen_images)) {
    for (const auto& w : m.words) {
      Ten3 t = pure<3>({m.one(), m.one(), m.one()});
      for (const auto& g : w) t = tmul<3>(m, kAlt3, t, images.at(g));
      mu.push_back(std::move(t));
    }
  }

  Ten3 apply(const Vec& v) const {
    Ten3 out;
    for (const auto& [i, c] : v)
      for (const auto& [k, cc] : mu[i]) add(out, k, c * cc);
    return out;
  }

  // Laws on the single element r.
  HgVerdicts laws(const Vec& r) const {
    HgVerdicts v;
    const Ten3 t = apply(r);
    using Key2 = std::array<int, 2>;
    Sparse<Key2> left, right;  // r_(1) ⊗ r_(2) r_(3) and r_(1) r_(2) ⊗ r_(3)
    for (const auto& [k, c] : t) {
      for (const auto& [p, pc] : m.product(k[1], k[2])) add(left, Key2{k[0], p}, c * pc);
      for (const auto& [p, pc] : m.product(k[0], k[1])) add(right, Key2{p, k[2]}, c * pc);
    }
    Sparse<Key2> r1, one_r;
    for (const auto& [i, c] : r) {
      add(r1, Key2{i, 0}, c);
      add(one_r, Key2{0, i}, c);
    }
    v.left_unit = left == r1;
    v.right_unit = right == one_r;
    using Key5 = std::array<int, 5>;
    Sparse<Key5> a, b;
    for (const auto& [k, c] : t) {
      for (const auto& [kk, cc] : mu[k[0]]) add(a, Key5{kk[0], kk[1], kk[2], k[1], k[2]}, c * cc);
      for (const auto& [kk, cc] : mu[k[2]]) add(b, Key5{k[0], k[1], kk[0], kk[1], kk[2]}, c * cc);
    }
    v.coassociative = a == b;
    return v;
  }

  bool multiplicative() const {
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j)
        if (tmul<3>(m, kAlt3, mu[i], mu[j]) != apply(m.product(i, j))) return false;
    return true;
  }

  HgVerdicts full_basis() const {
    HgVerdicts v;
    v.algebra_map = multiplicative();
    for (int i = 0; i < m.dim(); ++i) {
      const HgVerdicts l = laws(m.basis(i));
      v.left_unit &= l.left_unit;
      v.right_unit &= l.right_unit;
      v.coassociative &= l.coassociative;
    }
    return v;
  }
};

// Poisson laws on the whole basis.
struct PoissonVerdicts {
  bool antisymmetric = true;
  bool jacobi = true;
  bool leibniz = true;
  bool all() const { return antisymmetric && jacobi && leibniz; }
};

inline PoissonVerdicts poisson_full_basis(const Model& m) {
  PoissonVerdicts v;
  const int n = m.dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (combine(m.bracket(a, b), m.bracket(b, a)) != Vec{}) v.antisymmetric = false;
      for (int c = 0; c < n; ++c) {
        const Vec ea = m.basis(a), eb = m.basis(b), ec = m.basis(c);
        Vec j = m.br(ea, m.br(eb, ec));
        j = combine(j, m.br(eb, m.br(ec, ea)));
        j = combine(j, m.br(ec, m.br(ea, eb)));
        if (!j.empty()) v.jacobi = false;
        const Vec lhs = m.br(ea, m.mul(eb, ec));
        const Vec rhs = combine(m.mul(m.br(ea, eb), ec), m.mul(eb, m.br(ea, ec)));
        if (lhs != rhs) v.leibniz = false;
      }
    }
  return v;
}

// {x⊗y⊗z, x'⊗y'⊗z'} with signs (+, -, +) and the middle product opposite.
inline Ten3 triple_bracket(const Model& m, const Ten3& s, const Ten3& t) {
  Ten3 out;
  for (const auto& [ka, ca] : s)
    for (const auto& [kb, cb] : t) {
      const Vec p0 = m.product(ka[0], kb[0]), p1 = m.product(kb[1], ka[1]), p2 = m.product(ka[2], kb[2]);
      const Vec b0 = m.bracket(ka[0], kb[0]), b1 = m.bracket(ka[1], kb[1]), b2 = m.bracket(ka[2], kb[2]);
      for (const auto& [k, c] : pure<3>({b0, p1, p2}, ca * cb)) add(out, k, c);
      for (const auto& [k, c] : pure<3>({p0, b1, p2}, -ca * cb)) add(out, k, c);
      for (const auto& [k, c] : pure<3>({p0, p1, b2}, ca * cb)) add(out, k, c);
    }
  return out;
}

inline bool poisson_hg_full_basis(const Model& m, const HgOracle& h) {
  for (int a = 0; a < m.dim(); ++a)
    for (int b = 0; b < m.dim(); ++b)
      if (h.apply(m.bracket(a, b)) != triple_bracket(m, h.mu[a], h.mu[b])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Hopf structure from a Hopf-Galois map and a character alpha:
// Delta(r) = alpha(r_(2)) r_(1) ⊗ r_(3), S(r) = alpha(r_(1) r_(3)) r_(2).

struct HopfOracle {
  const Model& m;
  std::vector<Sparse<std::array<int, 2>>> delta;
  std::vector<Q> counit;
  std::vector<Vec> antipode;

  HopfOracle(const HgOracle& h, const std::vector<Q>& alpha_on_basis) : m(h.m), counit(alpha_on_basis) {
    const auto alpha = [&](const Vec& v) {
      Q s = 0;
      for (const auto& [k, c] : v) s += c * alpha_on_basis[k];
      return s;
    };
    for (int i = 0; i < m.dim(); ++i) {
      Sparse<std::array<int, 2>> d;
      Vec s;
      for (const auto& [k, c] : h.mu[i]) {
        add(d, std::array<int, 2>{k[0], k[2]}, c * alpha_on_basis[k[1]]);
        add(s, k[1], c * alpha(m.product(k[0], k[2])));
      }
      delta.push_back(std::move(d));
      antipode.push_back(std::move(s));
    }
  }

  bool axioms() const {
    using K2 = std::array<int, 2>;
    using K3 = std::array<int, 3>;
    const int n = m.dim();
    for (int i = 0; i < n; ++i) {
      Sparse<K3> l, r;
      for (const auto& [k, c] : delta[i]) {
        for (const auto& [kk, cc] : delta[k[0]]) add(l, K3{kk[0], kk[1], k[1]}, c * cc);
        for (const auto& [kk, cc] : delta[k[1]]) add(r, K3{k[0], kk[0], kk[1]}, c * cc);
      }
      if (l != r) return false;
      Vec cl, cr, sl, sr;
      for (const auto& [k, c] : delta[i]) {
        add(cl, k[1], c * counit[k[0]]);
        add(cr, k[0], c * counit[k[1]]);
        for (const auto& [p, pc] : m.mul(antipode[k[0]], m.basis(k[1]))) add(sl, p, c * pc);
        for (const auto& [p, pc] : m.mul(m.basis(k[0]), antipode[k[1]])) add(sr, p, c * pc);
      }
      const Vec e = counit[i] == 0 ? Vec{} : Vec{{0, counit[i]}};
      if (cl != m.basis(i) || cr != m.basis(i) || sl != e || sr != e) return false;
      for (int j = 0; j < n; ++j) {
        Sparse<K2> dij;
        for (const auto& [k, c] : m.product(i, j))
          for (const auto& [kk, cc] : delta[k]) add(dij, kk, c * cc);
        if (dij != tmul<2>(m, {false, false}, delta[i], delta[j])) return false;
        Q eij = 0;
        for (const auto& [k, c] : m.product(i, j)) eij += c * counit[k];
        if (eij != counit[i] * counit[j]) return false;
        Vec sij;
        for (const auto& [k, c] : m.product(i, j)) sij = combine(sij, antipode[k], c);
        if (sij != m.mul(antipode[j], antipode[i])) return false;
      }
    }
    return true;
  }
};

// ---------------------------------------------------------------------------
// Enveloping algebra as a truncated quotient of the free algebra on alpha(a_i),
// beta(a_i) by the defining relations, with every placement u r v up to the
// given length.

using FWord = std::vector<int>;
using FPoly = Sparse<FWord>;
using FKey3 = std::array<FWord, 3>;
using FTen3 = Sparse<FKey3>;

struct EnvelopeOracle {
  const Model& m;
  int n;
  std::size_t degree;
  std::vector<FPoly> relations;
  Echelon<FWord> ideal;
  mutable std::map<FWord, FPoly> cache;

  int alpha_letter(int i) const { return i; }
  int beta_letter(int i) const { return n + i; }

  FPoly alpha(const Vec& v) const {
    FPoly out;
    for (const auto& [k, c] : v) add(out, FWord{alpha_letter(k)}, c);
    return out;
  }
  FPoly beta(const Vec& v) const {
    FPoly out;
    for (const auto& [k, c] : v) add(out, FWord{beta_letter(k)}, c);
    return out;
  }
  static FPoly mul(const FPoly& a, const FPoly& b) {
    FPoly out;
    for (const auto& [wa, ca] : a)
      for (const auto& [wb, cb] : b) {
        FWord w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        add(out, w, ca * cb);
      }
    return out;
  }

  EnvelopeOracle(const Model& model, std::size_t deg) : m(model), n(model.dim()), degree(deg) {
    relations.push_back(combine(alpha(m.one()), FPoly{{FWord{}, 1}}, -1));
    relations.push_back(beta(m.one()));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Vec ei = m.basis(i), ej = m.basis(j);
        const FPoly ai = alpha(ei), aj = alpha(ej), bi = beta(ei), bj = beta(ej);
        relations.push_back(combine(mul(ai, aj), alpha(m.mul(ei, ej)), -1));
        relations.push_back(combine(combine(mul(bi, bj), mul(bj, bi), -1), beta(m.br(ei, ej)), -1));
        relations.push_back(combine(combine(mul(bi, aj), mul(aj, bi), -1), alpha(m.br(ei, ej)), -1));
        relations.push_back(combine(combine(beta(m.mul(ei, ej)), mul(ai, bj), -1), mul(aj, bi), -1));
      }
    std::vector<std::vector<FWord>> words_by_length{{FWord{}}};
    for (std::size_t l = 1; l <= degree; ++l) {
      std::vector<FWord> next;
      for (const FWord& w : words_by_length.back())
        for (int x = 0; x < 2 * n; ++x) {
          FWord ww = w;
          ww.push_back(x);
          next.push_back(ww);
        }
      words_by_length.push_back(std::move(next));
    }
    for (const FPoly& r : relations) {
      std::size_t len = 0;
      for (const auto& [w, c] : r) len = std::max(len, w.size());
      for (std::size_t lu = 0; lu + len <= degree; ++lu)
        for (std::size_t lv = 0; lu + lv + len <= degree; ++lv)
          for (const FWord& u : words_by_length[lu])
            for (const FWord& v : words_by_length[lv]) ideal.insert(mul(mul(FPoly{{u, 1}}, r), FPoly{{v, 1}}));
    }
  }

  const FPoly& reduce_word(const FWord& w) const {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, ideal.reduce(FPoly{{w, 1}})).first;
    return it->second;
  }
  bool is_zero(const FPoly& p) const {
    FPoly out;
    for (const auto& [w, c] : p)
      for (const auto& [ww, cc] : reduce_word(w)) add(out, ww, c * cc);
    return out.empty();
  }
  bool is_zero(const FTen3& t) const {
    FTen3 out;
    for (const auto& [k, c] : t)
      for (const auto& [a, ca] : reduce_word(k[0]))
        for (const auto& [b, cb] : reduce_word(k[1]))
          for (const auto& [d, cd] : reduce_word(k[2])) add(out, FKey3{a, b, d}, c * ca * cb * cd);
    return out.empty();
  }

  static FTen3 tmul(const FTen3& a, const FTen3& b) {
    FTen3 out;
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b) {
        FKey3 k;
        k[0] = ka[0];
        k[0].insert(k[0].end(), kb[0].begin(), kb[0].end());
        k[1] = kb[1];
        k[1].insert(k[1].end(), ka[1].begin(), ka[1].end());
        k[2] = ka[2];
        k[2].insert(k[2].end(), kb[2].begin(), kb[2].end());
        add(out, k, ca * cb);
      }
    return out;
  }
  FTen3 pure3(int a, bool beta_a, int b, bool beta_b, int c, bool beta_c, const Q& coeff) const {
    return FTen3{{FKey3{FWord{beta_a ? beta_letter(a) : alpha_letter(a)}, FWord{beta_b ? beta_letter(b) : alpha_letter(b)},
                        FWord{beta_c ? beta_letter(c) : alpha_letter(c)}},
                  coeff}};
  }
  FTen3 alpha3(const Ten3& t) const {
    FTen3 out;
    for (const auto& [k, c] : t)
      for (const auto& [kk, cc] : pure3(k[0], false, k[1], false, k[2], false, c)) add(out, kk, cc);
    return out;
  }
  FTen3 xi(const Ten3& t) const {
    FTen3 out;
    for (const auto& [k, c] : t)
      for (const auto& slots : {std::array<bool, 3>{false, false, true}, std::array<bool, 3>{false, true, false},
                                std::array<bool, 3>{true, false, false}})
        for (const auto& [kk, cc] : pure3(k[0], slots[0], k[1], slots[1], k[2], slots[2], c)) add(out, kk, cc);
    return out;
  }
};

inline FTen3 sub(const FTen3& a, const FTen3& b) { return combine(a, b, -1); }

// The twelve pair laws in the order the library reports them.
inline std::vector<bool> envelope_pair_laws(const EnvelopeOracle& u, int i, int j) {
  const Model& m = u.m;
  const Vec ea = m.basis(i), eb = m.basis(j);
  const FPoly al = u.alpha(ea), bl = u.alpha(eb), ba = u.beta(ea), bb = u.beta(eb);
  const FPoly ab = u.alpha(m.mul(ea, eb)), bab = u.beta(m.mul(ea, eb));
  const FPoly abr = u.alpha(m.br(ea, eb)), bbr = u.beta(m.br(ea, eb));
  const auto mul = EnvelopeOracle::mul;
  const auto eq = [&](const FPoly& x, const FPoly& y) { return u.is_zero(combine(x, y, -1)); };
  // x ∘ y = y x.
  const auto op = [&](const FPoly& x, const FPoly& y) { return mul(y, x); };
  return {
      eq(ab, mul(al, bl)),
      eq(bbr, combine(mul(ba, bb), mul(bb, ba), -1)),
      eq(abr, combine(mul(ba, bl), mul(bl, ba), -1)),
      eq(bab, combine(mul(al, bb), mul(bl, ba))),
      eq(abr, combine(mul(al, bb), mul(bb, al), -1)),
      eq(bab, combine(mul(ba, bl), mul(bb, al))),
      eq(abr, combine(mul(al, bb), mul(bb, al), -1)),
      eq(bab, combine(mul(ba, bl), mul(bb, al))),
      eq(bab, combine(op(al, bb), op(bl, ba))),
      eq(bab, combine(op(ba, bl), op(bb, al))),
      eq(abr, combine(op(bl, ba), op(ba, bl), -1)),
      eq(abr, combine(op(bb, al), op(al, bb), -1)),
  };
}

// Four laws per ordered pair of basis triples, as reported by the library.
inline std::vector<bool> lemma55_laws(const EnvelopeOracle& u, const std::vector<Key3>& sample) {
  const Model& m = u.m;
  std::vector<bool> out;
  std::vector<Ten3> ts;
  std::vector<FTen3> xs, as;
  for (const Key3& k : sample) {
    ts.push_back(Ten3{{k, 1}});
    xs.push_back(u.xi(ts.back()));
    as.push_back(u.alpha3(ts.back()));
  }
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = 0; j < sample.size(); ++j) {
      const Ten3 prod = tmul<3>(m, kAlt3, ts[i], ts[j]);
      const Ten3 br = triple_bracket(m, ts[i], ts[j]);
      const auto T = EnvelopeOracle::tmul;
      out.push_back(u.is_zero(sub(u.alpha3(prod), T(as[i], as[j]))));
      out.push_back(u.is_zero(sub(u.xi(br), sub(T(xs[i], xs[j]), T(xs[j], xs[i])))));
      out.push_back(u.is_zero(sub(u.alpha3(br), sub(T(xs[i], as[j]), T(as[j], xs[i])))));
      out.push_back(u.is_zero(sub(u.xi(prod), combine(T(as[i], xs[j]), T(as[j], xs[i])))));
    }
  return out;
}

struct Thm59Verdicts {
  bool relations = true;
  std::vector<bool> condition;  // per basis element
};

inline Thm59Verdicts thm59(const EnvelopeOracle& u, const HgOracle& h) {
  Thm59Verdicts v;
  std::vector<FTen3> alpha_img, beta_img;
  for (int i = 0; i < u.n; ++i) {
    alpha_img.push_back(u.alpha3(h.mu[i]));
    beta_img.push_back(u.xi(h.mu[i]));
  }
  for (const FPoly& r : u.relations) {
    FTen3 img;
    for (const auto& [w, c] : r) {
      FTen3 t{{FKey3{}, c}};
      for (int l : w) t = EnvelopeOracle::tmul(t, l < u.n ? alpha_img[l] : beta_img[l - u.n]);
      img = combine(img, t);
    }
    if (!u.is_zero(img)) v.relations = false;
  }
  for (int i = 0; i < u.n; ++i) {
    FPoly value = u.beta(u.m.basis(i));
    for (const auto& [k, c] : h.mu[i])
      value = combine(value, EnvelopeOracle::mul(EnvelopeOracle::mul(u.alpha(u.m.basis(k[0])), u.beta(u.m.basis(k[1]))),
                                                 u.alpha(u.m.basis(k[2]))),
                      c);
    v.condition.push_back(u.is_zero(value));
  }
  return v;
}

}  // namespace oracle
