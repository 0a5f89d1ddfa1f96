#pragma once

// Wreath recursion a_i = (1, ..., a_i, ..., 1) sigma_i and everything built on
// it: decompositions, states, the vertex action, portraits and leaf actions.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "selfsim/perm.hpp"
#include "selfsim/word.hpp"

namespace selfsim {

/// g = (g_1, ..., g_n) root.
struct WreathDecomposition {
  std::vector<GeneratorWord> states;  // states[k-1] is the state at letter k
  Permutation root;

  const GeneratorWord& state(unsigned letter) const { return states.at(letter - 1); }
};

/// Decomposes a free-group word along the wreath recursion.
///
/// Uses (u v)_k = u_k v_{k^theta_u} and theta_{uv} = theta_u theta_v, so a
/// syllable a_i^r lands in the coordinate k with k^theta = i. States are
/// freely reduced but not canonicalized.
inline WreathDecomposition decompose(const GeneratorWord& w) {
  const unsigned n = w.n();
  WreathDecomposition d;
  d.states.assign(n, GeneratorWord(n));
  std::vector<Point> theta(n), theta_inv(n);
  for (Point k = 0; k < n; ++k) theta[k] = theta_inv[k] = k;

  std::vector<Permutation> sig;
  sig.reserve(n);
  for (unsigned i = 1; i <= n; ++i) sig.push_back(sigma(n, i));
  const long long order = static_cast<long long>(n) - 1;

  for (const auto& s : w.syllables()) {
    const Point k = theta_inv[s.gen - 1];
    d.states[k].append(s);
    const long long r = ((s.exp % order) + order) % order;
    if (r == 0) continue;
    const Permutation step = pow(sig[s.gen - 1], r);
    for (Point x = 0; x < n; ++x) theta[x] = step.image0(theta[x]);
    for (Point x = 0; x < n; ++x) theta_inv[theta[x]] = x;
  }
  d.root = Permutation::from_zero_based(std::move(theta));
  return d;
}

/// Root permutation of w only.
inline Permutation root_permutation(const GeneratorWord& w) {
  const unsigned n = w.n();
  Permutation theta = Permutation::identity(n);
  for (const auto& s : w.syllables()) theta = theta * pow(sigma(n, s.gen), s.exp);
  return theta;
}

inline void check_vertex(const Vertex& v, unsigned n) {
  for (unsigned x : v.letters)
    if (x < 1 || x > n) throw std::invalid_argument("vertex letter out of range");
}

/// State of w at vertex v (w itself at the root).
inline GeneratorWord state_at(const GeneratorWord& w, const Vertex& v) {
  check_vertex(v, w.n());
  GeneratorWord cur = w;
  for (unsigned x : v.letters) {
    if (cur.empty()) break;
    cur = decompose(cur).state(x);
  }
  return cur;
}

/// v^w: x_1^{g(root)} x_2^{g(x_1)} ...
inline Vertex act(const GeneratorWord& w, const Vertex& v) {
  check_vertex(v, w.n());
  Vertex out;
  out.letters.reserve(v.length());
  GeneratorWord cur = w;
  for (unsigned x : v.letters) {
    if (cur.empty()) {
      out.letters.push_back(x);
      continue;
    }
    auto d = decompose(cur);
    out.letters.push_back(d.root(x));
    cur = d.state(x);
  }
  return out;
}

/// Labels of every vertex of length < depth, stored level by level in
/// lexicographic order.
class Portrait {
 public:
  Portrait(unsigned n, std::size_t depth) : n_(n), depth_(depth) {
    if (depth == 0) throw std::invalid_argument("portrait depth must be positive");
    std::size_t count = 0, level_size = 1;
    for (std::size_t l = 0; l < depth; ++l) {
      offsets_.push_back(count);
      count += level_size;
      level_size *= n;
    }
    labels_.assign(count, Permutation::identity(n));
  }

  unsigned n() const { return n_; }
  std::size_t depth() const { return depth_; }

  const Permutation& label(const Vertex& v) const { return labels_.at(slot(v)); }
  void set_label(const Vertex& v, Permutation p) {
    if (p.degree() != n_) throw std::invalid_argument("label degree must equal n");
    labels_.at(slot(v)) = std::move(p);
  }

  const Permutation& label(std::size_t level, std::size_t index) const { return labels_.at(offsets_.at(level) + index); }

  bool is_trivial() const {
    for (const auto& p : labels_)
      if (!p.is_identity()) return false;
    return true;
  }

  /// Image of a vertex with |v| <= depth.
  Vertex act(const Vertex& v) const {
    if (v.length() > depth_) throw std::invalid_argument("vertex deeper than portrait");
    check_vertex(v, n_);
    Vertex out;
    std::size_t idx = 0;
    for (std::size_t l = 0; l < v.length(); ++l) {
      out.letters.push_back(label(l, idx)(v.letters[l]));
      idx = idx * n_ + (v.letters[l] - 1);
    }
    return out;
  }

  /// Action on the deepest level, as a permutation of degree n^depth.
  Permutation leaf_action() const {
    std::size_t degree = 1;
    for (std::size_t l = 0; l < depth_; ++l) degree *= n_;
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i)
      img[i] = static_cast<Point>(vertex_index(act(vertex_at(i, n_, depth_)), n_));
    return Permutation::from_zero_based(std::move(img));
  }

  friend bool operator==(const Portrait&, const Portrait&) = default;

 private:
  std::size_t slot(const Vertex& v) const {
    if (v.length() >= depth_) throw std::out_of_range("vertex outside portrait");
    check_vertex(v, n_);
    return offsets_[v.length()] + vertex_index(v, n_);
  }

  unsigned n_;
  std::size_t depth_;
  std::vector<std::size_t> offsets_;
  std::vector<Permutation> labels_;
};

/// Portrait of w to the given depth, labels taken from decompositions of states.
inline Portrait portrait(const GeneratorWord& w, std::size_t depth) {
  const unsigned n = w.n();
  Portrait p(n, depth);
  std::vector<GeneratorWord> level{w};
  for (std::size_t l = 0; l < depth; ++l) {
    std::vector<GeneratorWord> next;
    next.reserve(level.size() * n);
    for (std::size_t idx = 0; idx < level.size(); ++idx) {
      auto d = decompose(level[idx]);
      p.set_label(vertex_at(idx, n, l), d.root);
      if (l + 1 < depth)
        for (auto& s : d.states) next.push_back(std::move(s));
    }
    level = std::move(next);
  }
  return p;
}

/// Every vertex labelled p; with p = omega this is the shift automorphism lambda.
inline Portrait constant_portrait(const Permutation& p, std::size_t depth) {
  Portrait out(static_cast<unsigned>(p.degree()), depth);
  const unsigned n = out.n();
  std::size_t level_size = 1;
  for (std::size_t l = 0; l < depth; ++l) {
    for (std::size_t i = 0; i < level_size; ++i) out.set_label(vertex_at(i, n, l), p);
    level_size *= n;
  }
  return out;
}

/// a_i -> a_{i+1}, a_n -> a_1; exponents unchanged.
inline GeneratorWord shift(const GeneratorWord& w) {
  const unsigned n = w.n();
  GeneratorWord out(n);
  for (const auto& s : w.syllables()) out.append({s.gen % n + 1, s.exp});
  return out;
}

/// Level-m permutations of the generators, computed from the recursive
/// definition and composed per syllable. Vertices are indexed
/// lexicographically.
class LeafActions {
 public:
  LeafActions(unsigned n, std::size_t level) : n_(n), level_(level) {
    if (n < 3) throw std::invalid_argument("alphabet size must be at least 3");
    if (level == 0) throw std::invalid_argument("level must be positive");
    degree_ = 1;
    for (std::size_t l = 0; l < level; ++l) degree_ *= n;
    for (unsigned i = 1; i <= n; ++i) {
      const Permutation root = sigma(n, i);
      std::vector<Point> img(degree_);
      for (std::size_t v = 0; v < degree_; ++v) {
        Vertex x = vertex_at(v, n, level);
        bool active = true;
        for (auto& letter : x.letters) {
          if (!active) break;
          const unsigned before = letter;
          letter = root(letter);
          active = before == i;
        }
        img[v] = static_cast<Point>(vertex_index(x, n));
      }
      const Permutation g = Permutation::from_zero_based(std::move(img));
      std::vector<Permutation> powers{Permutation::identity(degree_)};
      for (unsigned k = 1; k + 1 < n; ++k) powers.push_back(powers.back() * g);
      gen_powers_.push_back(std::move(powers));
    }
  }

  unsigned n() const { return n_; }
  std::size_t level() const { return level_; }
  std::size_t degree() const { return degree_; }

  const Permutation& generator(unsigned i) const { return gen_powers_.at(i - 1).at(1); }

  Permutation operator()(const GeneratorWord& w) const {
    if (w.n() != n_) throw std::invalid_argument("word over a different alphabet");
    const long long order = static_cast<long long>(n_) - 1;
    std::vector<Point> cur = Permutation::identity(degree_).zero_based();
    for (const auto& s : w.syllables()) {
      const long long r = ((s.exp % order) + order) % order;
      if (r == 0) continue;
      const auto& step = gen_powers_[s.gen - 1][static_cast<std::size_t>(r)];
      for (auto& x : cur) x = step.image0(x);
    }
    return Permutation::from_zero_based(std::move(cur));
  }

  std::vector<Permutation> generators() const {
    std::vector<Permutation> out;
    for (unsigned i = 1; i <= n_; ++i) out.push_back(generator(i));
    return out;
  }

 private:
  unsigned n_;
  std::size_t level_;
  std::size_t degree_;
  std::vector<std::vector<Permutation>> gen_powers_;
};

/// Permutation induced by w on level m.
inline Permutation leaf_action(const GeneratorWord& w, std::size_t m) { return LeafActions(w.n(), m)(w); }

/// Level-m permutation of an element of the first level stabilizer given by
/// its states, each state acting on its own subtree through `below` (level m-1).
inline Permutation block_action(std::span<const GeneratorWord> states, const LeafActions& below) {
  const unsigned n = below.n();
  if (states.size() != n) throw std::invalid_argument("need exactly n states");
  const std::size_t block = below.degree();
  std::vector<Point> img(block * n);
  for (unsigned k = 0; k < n; ++k) {
    const Permutation p = below(states[k]);
    for (std::size_t x = 0; x < block; ++x) img[k * block + x] = static_cast<Point>(k * block + p.image0(static_cast<Point>(x)));
  }
  return Permutation::from_zero_based(std::move(img));
}

}  // namespace selfsim
