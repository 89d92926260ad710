#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "bvkit/artinian.hpp"
#include "bvkit/error.hpp"
#include "bvkit/rational.hpp"

namespace bvkit {

// A word v_{i_1} (x) ... (x) v_{i_n} in the basis of V.
using TensorWord = std::vector<std::size_t>;

// Index of a word among all words of its length (first letter most significant).
inline std::size_t word_index(const TensorWord& w, std::size_t dim) {
  std::size_t idx = 0;
  for (std::size_t x : w) idx = idx * dim + x;
  return idx;
}

inline TensorWord word_at(std::size_t idx, std::size_t length, std::size_t dim) {
  TensorWord w(length);
  for (std::size_t k = length; k-- > 0;) {
    w[k] = idx % dim;
    idx /= dim;
  }
  return w;
}

inline std::size_t word_count(std::size_t length, std::size_t dim) {
  std::size_t n = 1;
  for (std::size_t k = 0; k < length; ++k) n *= dim;
  return n;
}

// Cofree comultiplication on T^{>=1}(V): every split into two nonempty halves.
inline std::vector<std::pair<TensorWord, TensorWord>> deconcatenate(const TensorWord& w) {
  std::vector<std::pair<TensorWord, TensorWord>> out;
  for (std::size_t i = 1; i < w.size(); ++i)
    out.emplace_back(TensorWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)),
                     TensorWord(w.begin() + static_cast<std::ptrdiff_t>(i), w.end()));
  return out;
}

// Element of T(V) by words.
template <class Scalar>
using TensorElement = std::map<TensorWord, Scalar>;

template <class Scalar>
void tensor_accumulate(TensorElement<Scalar>& acc, const TensorWord& w, const std::type_identity_t<Scalar>& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = acc.try_emplace(w, Scalar(0));
  it->second += c;
  if (is_zero(it->second)) acc.erase(it);
}

// Element of Hom(V^{(x)k}, V) summed over arities k >= 1; the arity-k component
// has cohomological degree k - 1 and the tensor grading of V^{(x)n} is n mod 2.
template <class Scalar>
class MultilinearMap {
 public:
  explicit MultilinearMap(std::size_t dim = 1) : dim_(dim) {
    if (dim == 0) throw InputError("multilinear maps need a nonzero space");
  }

  std::size_t dim() const { return dim_; }

  void set(const TensorWord& inputs, std::size_t out, const Scalar& value) {
    check(inputs, out);
    auto& comp = component_storage(inputs.size());
    comp[word_index(inputs, dim_) * dim_ + out] = value;
  }
  Scalar get(const TensorWord& inputs, std::size_t out) const {
    check(inputs, out);
    auto it = comps_.find(inputs.size());
    if (it == comps_.end()) return Scalar(0);
    return it->second[word_index(inputs, dim_) * dim_ + out];
  }
  void add(const TensorWord& inputs, std::size_t out, const Scalar& value) {
    check(inputs, out);
    auto& comp = component_storage(inputs.size());
    comp[word_index(inputs, dim_) * dim_ + out] += value;
  }

  // Arities with a nonzero entry.
  std::vector<std::size_t> arities() const {
    std::vector<std::size_t> out;
    for (const auto& [k, v] : comps_)
      for (const auto& c : v)
        if (!is_zero(c)) {
          out.push_back(k);
          break;
        }
    return out;
  }
  std::size_t max_arity() const {
    auto a = arities();
    return a.empty() ? 0 : a.back();
  }
  bool is_zero_map() const { return arities().empty(); }
  // Degree k - 1 of a single-arity map; throws InputError when inhomogeneous or zero.
  int degree() const {
    auto a = arities();
    if (a.size() != 1) throw InputError("multilinear map is not homogeneous");
    return static_cast<int>(a.front()) - 1;
  }
  MultilinearMap component(std::size_t k) const {
    MultilinearMap r(dim_);
    if (auto it = comps_.find(k); it != comps_.end()) r.comps_[k] = it->second;
    return r;
  }

  // phi_k on one word of length k.
  std::vector<Scalar> apply(const TensorWord& inputs) const {
    std::vector<Scalar> out(dim_, Scalar(0));
    auto it = comps_.find(inputs.size());
    if (it == comps_.end()) return out;
    std::size_t base = word_index(inputs, dim_) * dim_;
    for (std::size_t o = 0; o < dim_; ++o) out[o] = it->second[base + o];
    return out;
  }

  MultilinearMap& operator+=(const MultilinearMap& o) {
    same_dim(o);
    for (const auto& [k, v] : o.comps_) {
      auto& comp = component_storage(k);
      for (std::size_t i = 0; i < v.size(); ++i) comp[i] += v[i];
    }
    return *this;
  }
  MultilinearMap& operator*=(const Scalar& c) {
    for (auto& [k, v] : comps_)
      for (auto& x : v) x = x * c;
    return *this;
  }
  friend MultilinearMap operator+(MultilinearMap a, const MultilinearMap& b) { return a += b; }
  friend MultilinearMap operator-(MultilinearMap a, const MultilinearMap& b) {
    MultilinearMap nb = b;
    nb *= Scalar(-1);
    return a += nb;
  }
  friend MultilinearMap operator*(MultilinearMap a, const Scalar& c) { return a *= c; }
  friend bool operator==(const MultilinearMap& a, const MultilinearMap& b) { return (a - b).is_zero_map(); }

 private:
  void check(const TensorWord& inputs, std::size_t out) const {
    if (inputs.empty()) throw InputError("arity 0 components are not part of the deformation complex");
    if (out >= dim_) throw InputError("output index out of range");
    for (std::size_t x : inputs)
      if (x >= dim_) throw InputError("input index out of range");
  }
  void same_dim(const MultilinearMap& o) const {
    if (o.dim_ != dim_) throw InputError("multilinear maps on different spaces");
  }
  std::vector<Scalar>& component_storage(std::size_t k) {
    auto it = comps_.find(k);
    if (it == comps_.end()) it = comps_.emplace(k, std::vector<Scalar>(word_count(k, dim_) * dim_, Scalar(0))).first;
    return it->second;
  }

  std::size_t dim_;
  std::map<std::size_t, std::vector<Scalar>> comps_;
};

// The coderivation extending the arity-k component of phi, applied to one word:
// sum_j (-1)^{(k-1) j} v_1..v_j (x) phi(v_{j+1}..v_{j+k}) (x) v_{j+k+1}..v_n.
template <class Scalar>
TensorElement<Scalar> apply_coderivation(const MultilinearMap<Scalar>& phi, std::size_t k, const TensorWord& w) {
  TensorElement<Scalar> out;
  if (w.size() < k) return out;
  auto comp = phi.component(k);
  for (std::size_t j = 0; j + k <= w.size(); ++j) {
    Scalar sign = ((k - 1) * j) % 2 == 0 ? Scalar(1) : Scalar(-1);
    TensorWord mid(w.begin() + static_cast<std::ptrdiff_t>(j), w.begin() + static_cast<std::ptrdiff_t>(j + k));
    auto val = comp.apply(mid);
    for (std::size_t o = 0; o < phi.dim(); ++o) {
      if (is_zero(val[o])) continue;
      TensorWord r(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j));
      r.push_back(o);
      r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(j + k), w.end());
      tensor_accumulate(out, r, sign * val[o]);
    }
  }
  return out;
}

// Coderivation applied to an element, summing over every arity of phi.
template <class Scalar>
TensorElement<Scalar> apply_coderivation(const MultilinearMap<Scalar>& phi, const TensorElement<Scalar>& x) {
  TensorElement<Scalar> out;
  for (std::size_t k : phi.arities())
    for (const auto& [w, c] : x)
      for (const auto& [w2, c2] : apply_coderivation(phi, k, w)) tensor_accumulate(out, w2, c * c2);
  return out;
}

// Matrix of the extension of the arity-k component on V^{(x)n} -> V^{(x)(n-k+1)}.
template <class Scalar>
struct ExtensionComponent {
  std::size_t in_length = 0;
  std::size_t out_length = 0;
  std::vector<TensorElement<Scalar>> columns;  // image of each input word, by word_index
};

template <class Scalar>
std::vector<ExtensionComponent<Scalar>> coderivation_extend(const MultilinearMap<Scalar>& phi, std::size_t k,
                                                            std::size_t N) {
  if (k == 0 || N < k) throw InputError("coderivation extension needs 1 <= k <= N");
  std::vector<ExtensionComponent<Scalar>> out;
  for (std::size_t n = k; n <= N; ++n) {
    ExtensionComponent<Scalar> c;
    c.in_length = n;
    c.out_length = n - k + 1;
    for (std::size_t i = 0; i < word_count(n, phi.dim()); ++i)
      c.columns.push_back(apply_coderivation(phi, k, word_at(i, n, phi.dim())));
    out.push_back(std::move(c));
  }
  return out;
}

// Default window: two tensor degrees beyond the largest input arity.
template <class Scalar>
std::size_t default_window(const MultilinearMap<Scalar>& a, const MultilinearMap<Scalar>& b) {
  return std::max(a.max_arity(), b.max_arity()) + 2;
}

// [phi, psi] = phi o psi~ - (-1)^{|phi||psi|} psi o phi~, read on V-valued components.
// Throws InputError when an output arity exceeds the window.
template <class Scalar>
MultilinearMap<Scalar> gerstenhaber_bracket(const MultilinearMap<Scalar>& phi, const MultilinearMap<Scalar>& psi,
                                            std::optional<std::size_t> window = std::nullopt) {
  if (phi.dim() != psi.dim()) throw InputError("multilinear maps on different spaces");
  std::size_t N = window ? *window : default_window(phi, psi);
  std::size_t dim = phi.dim();
  MultilinearMap<Scalar> out(dim);
  for (std::size_t k : phi.arities())
    for (std::size_t l : psi.arities()) {
      std::size_t n = k + l - 1;
      if (n > N) throw InputError("bracket component of arity " + std::to_string(n) + " is outside the window");
      Scalar sign = ((k - 1) * (l - 1)) % 2 == 0 ? Scalar(-1) : Scalar(1);
      auto pk = phi.component(k), ql = psi.component(l);
      for (std::size_t i = 0; i < word_count(n, dim); ++i) {
        TensorWord w = word_at(i, n, dim);
        for (const auto& [u, c] : apply_coderivation(ql, l, w)) {
          auto val = pk.apply(u);
          for (std::size_t o = 0; o < dim; ++o)
            if (!is_zero(val[o])) out.add(w, o, c * val[o]);
        }
        for (const auto& [u, c] : apply_coderivation(pk, k, w)) {
          auto val = ql.apply(u);
          for (std::size_t o = 0; o < dim; ++o)
            if (!is_zero(val[o])) out.add(w, o, sign * c * val[o]);
        }
      }
    }
  return out;
}

// Delta(D x) = sum D(a) (x) b + (-1)^{d |a|} a (x) D(b) on every word of length <= N.
template <class Scalar>
bool check_co_leibniz(const MultilinearMap<Scalar>& phi, std::size_t k, std::size_t N) {
  using Pair = std::map<std::pair<TensorWord, TensorWord>, Scalar>;
  auto acc = [](Pair& p, const TensorWord& a, const TensorWord& b, const Scalar& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = p.try_emplace({a, b}, Scalar(0));
    it->second += c;
    if (is_zero(it->second)) p.erase(it);
  };
  std::size_t d = k - 1;
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t i = 0; i < word_count(n, phi.dim()); ++i) {
      TensorWord x = word_at(i, n, phi.dim());
      Pair lhs, rhs;
      for (const auto& [y, c] : apply_coderivation(phi, k, x))
        for (const auto& [a, b] : deconcatenate(y)) acc(lhs, a, b, c);
      for (const auto& [a, b] : deconcatenate(x)) {
        for (const auto& [da, c] : apply_coderivation(phi, k, a)) acc(rhs, da, b, c);
        Scalar sign = (d * a.size()) % 2 == 0 ? Scalar(1) : Scalar(-1);
        for (const auto& [db, c] : apply_coderivation(phi, k, b)) acc(rhs, a, db, sign * c);
      }
      if (lhs != rhs) return false;
    }
  return true;
}

// (Delta (x) id) Delta = (id (x) Delta) Delta on every word of length <= N.
bool check_coassociativity(std::size_t dim, std::size_t N);

// Multiplication e_a e_b = sum_c mu[a][b][c] e_c on a finite-dimensional space.
template <class Scalar>
struct StructureTensor {
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<Scalar> mu;  // row-major [a][b][c]

  StructureTensor() = default;
  StructureTensor(std::size_t n, std::vector<std::string> labels)
      : dim(n), basis(std::move(labels)), mu(n * n * n, Scalar(0)) {
    if (n == 0) throw InputError("algebra dimension must be positive");
    if (basis.empty())
      for (std::size_t i = 0; i < n; ++i) basis.push_back("e" + std::to_string(i + 1));
    if (basis.size() != n) throw InputError("basis label count does not match the dimension");
  }
  Scalar& at(std::size_t a, std::size_t b, std::size_t c) { return mu.at((a * dim + b) * dim + c); }
  const Scalar& at(std::size_t a, std::size_t b, std::size_t c) const { return mu.at((a * dim + b) * dim + c); }

  MultilinearMap<Scalar> as_map() const {
    MultilinearMap<Scalar> f(dim);
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b)
        for (std::size_t c = 0; c < dim; ++c) f.set({a, b}, c, at(a, b, c));
    return f;
  }
};

using FiniteAlgebra = StructureTensor<Rational>;

// Direct scan of (e_a e_b) e_c = e_a (e_b e_c); returns the first failing triple.
template <class Scalar>
std::optional<std::vector<std::size_t>> associativity_failure(const StructureTensor<Scalar>& t) {
  std::size_t n = t.dim;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t o = 0; o < n; ++o) {
          Scalar left(0), right(0);
          for (std::size_t e = 0; e < n; ++e) {
            left += t.at(a, b, e) * t.at(e, c, o);
            right += t.at(b, c, e) * t.at(a, e, o);
          }
          if (!(left == right)) return std::vector<std::size_t>{a, b, c};
        }
  return std::nullopt;
}

struct AssociativityVerdict {
  bool direct = false;
  bool bracket = false;  // 1/2 [f, f] = 0
  std::optional<std::vector<std::size_t>> failing_triple;
  bool agree() const { return direct == bracket; }
};

template <class Scalar>
AssociativityVerdict check_associativity_bracket(const StructureTensor<Scalar>& t) {
  AssociativityVerdict v;
  v.failing_triple = associativity_failure(t);
  v.direct = !v.failing_triple.has_value();
  auto f = t.as_map();
  v.bracket = gerstenhaber_bracket(f, f).is_zero_map();
  return v;
}

struct DeformationVerdict {
  bool associative = false;    // f + h by direct scan over the Artinian base
  bool maurer_cartan = false;  // d_f h + 1/2 [h, h] = 0 with d_f = [f, -]
  bool agree() const { return associative == maurer_cartan; }
};

// Throws InputError when f is not associative or the dimensions differ.
DeformationVerdict check_deformation(const FiniteAlgebra& f, const StructureTensor<Artinian>& h);

struct ModuliTable {
  int cutoff = 0;
  std::size_t coordinates = 0;  // dim Hom(V (x) V, V)
  std::vector<std::size_t> coalgebra;    // H^0 per symmetric degree
  std::vector<std::size_t> local_ring;   // Hilbert function of the associativity scheme at f
  bool equal = false;
};

// dim V <= 2 and 0 <= D <= 4; throws InputError outside that envelope or when f is not associative.
ModuliTable deformation_moduli_truncated(const FiniteAlgebra& f, int D);

}  // namespace bvkit
