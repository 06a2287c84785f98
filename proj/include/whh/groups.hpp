#pragma once

// Group and groupoid presentations plus their (weak) Hopf algebras.

#include "whh/weak_hom_hopf.hpp"

#include <array>
#include <optional>

namespace whh {

struct PresentationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GroupPresentation {
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> table;  // table[a][b] = ab
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;
  std::vector<std::string> names;

  void validate() const {
    const auto n = order;
    if (n == 0) throw PresentationError("group of order 0");
    if (table.size() != n || inverse.size() != n) throw PresentationError("group table has wrong size");
    for (const auto& row : table) {
      if (row.size() != n) throw PresentationError("group table row has wrong size");
      for (auto v : row)
        if (v >= n) throw PresentationError("group table entry out of range");
    }
    if (identity >= n) throw PresentationError("identity index out of range");
    for (std::size_t a = 0; a < n; ++a) {
      if (table[identity][a] != a || table[a][identity] != a) throw PresentationError("identity law fails");
      if (inverse[a] >= n || table[a][inverse[a]] != identity || table[inverse[a]][a] != identity)
        throw PresentationError("inverse law fails at element " + std::to_string(a));
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            throw PresentationError("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(c) + ")");
    }
  }

  static GroupPresentation cyclic(std::size_t n) {
    GroupPresentation g;
    g.order = n;
    g.table.assign(n, std::vector<std::size_t>(n));
    g.inverse.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
      g.inverse[a] = (n - a) % n;
      g.names.push_back(a == 0 ? "1" : (a == 1 ? "g" : "g^" + std::to_string(a)));
    }
    return g;
  }

  /// Symmetric group on 3 letters; elements are permutations in lexicographic order.
  static GroupPresentation symmetric3() {
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index = [&](const std::array<int, 3>& p) {
      for (std::size_t i = 0; i < perms.size(); ++i)
        if (perms[i] == p) return i;
      throw PresentationError("not a permutation");
    };
    GroupPresentation g;
    g.order = 6;
    g.table.assign(6, std::vector<std::size_t>(6));
    g.inverse.resize(6);
    for (std::size_t a = 0; a < 6; ++a) {
      for (std::size_t b = 0; b < 6; ++b) {
        std::array<int, 3> c{};
        for (int k = 0; k < 3; ++k) c[k] = perms[a][perms[b][k]];  // (ab)(k) = a(b(k))
        g.table[a][b] = index(c);
      }
      std::array<int, 3> inv{};
      for (int k = 0; k < 3; ++k) inv[perms[a][k]] = k;
      g.inverse[a] = index(inv);
      g.names.push_back(std::to_string(perms[a][0]) + std::to_string(perms[a][1]) + std::to_string(perms[a][2]));
    }
    g.identity = 0;
    return g;
  }
};

struct GroupoidPresentation {
  std::size_t objects = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  // (source, target)
  // compose[a][b] = a∘b when source(a) == target(b)
  std::vector<std::vector<std::optional<std::size_t>>> compose;
  std::vector<std::string> names;

  [[nodiscard]] std::size_t size() const { return arrows.size(); }

  [[nodiscard]] std::optional<std::size_t> identity_of(std::size_t obj) const {
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      if (arrows[a].first != obj || arrows[a].second != obj) continue;
      bool unit = true;
      for (std::size_t b = 0; b < arrows.size() && unit; ++b) {
        if (arrows[b].second == obj && compose[a][b] != b) unit = false;
        if (arrows[b].first == obj && compose[b][a] != b) unit = false;
      }
      if (unit) return a;
    }
    return std::nullopt;
  }

  [[nodiscard]] std::size_t inverse_of(std::size_t a) const {
    for (std::size_t b = 0; b < arrows.size(); ++b) {
      auto ab = compose[a][b], ba = compose[b][a];
      if (ab && ba && *ab == *identity_of(arrows[a].second) && *ba == *identity_of(arrows[a].first)) return b;
    }
    throw PresentationError("arrow " + std::to_string(a) + " has no inverse");
  }

  void validate() const {
    const auto n = arrows.size();
    if (compose.size() != n) throw PresentationError("composition table has wrong size");
    for (const auto& [s, t] : arrows)
      if (s >= objects || t >= objects) throw PresentationError("arrow endpoint out of range");
    for (std::size_t a = 0; a < n; ++a) {
      if (compose[a].size() != n) throw PresentationError("composition row has wrong size");
      for (std::size_t b = 0; b < n; ++b) {
        bool composable = arrows[a].first == arrows[b].second;
        if (composable != compose[a][b].has_value())
          throw PresentationError("composition defined exactly when source(a)=target(b) fails at (" +
                                  std::to_string(a) + "," + std::to_string(b) + ")");
        if (composable) {
          auto c = *compose[a][b];
          if (c >= n || arrows[c].first != arrows[b].first || arrows[c].second != arrows[a].second)
            throw PresentationError("composite has wrong endpoints");
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          if (!compose[a][b] || !compose[b][c]) continue;
          if (compose[*compose[a][b]][c] != compose[a][*compose[b][c]]) throw PresentationError("associativity fails");
        }
    for (std::size_t o = 0; o < objects; ++o)
      if (!identity_of(o)) throw PresentationError("object " + std::to_string(o) + " has no identity arrow");
    for (std::size_t a = 0; a < n; ++a) (void)inverse_of(a);
  }

  /// Arrows i -> j for all objects i, j (the pair groupoid); arrow index = j*n + i.
  static GroupoidPresentation pair(std::size_t n) {
    GroupoidPresentation g;
    g.objects = n;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        g.arrows.emplace_back(i, j);
        g.names.push_back("e" + std::to_string(j) + std::to_string(i));
      }
    const auto m = g.arrows.size();
    g.compose.assign(m, std::vector<std::optional<std::size_t>>(m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (g.arrows[a].first == g.arrows[b].second) g.compose[a][b] = g.arrows[a].second * n + g.arrows[b].first;
    return g;
  }

  /// n objects with identity arrows only.
  static GroupoidPresentation discrete(std::size_t n) {
    GroupoidPresentation g;
    g.objects = n;
    for (std::size_t i = 0; i < n; ++i) {
      g.arrows.emplace_back(i, i);
      g.names.push_back("e" + std::to_string(i));
    }
    g.compose.assign(n, std::vector<std::optional<std::size_t>>(n));
    for (std::size_t i = 0; i < n; ++i) g.compose[i][i] = i;
    return g;
  }

  static GroupoidPresentation from_group(const GroupPresentation& G) {
    GroupoidPresentation g;
    g.objects = 1;
    g.arrows.assign(G.order, {0, 0});
    g.names = G.names;
    g.compose.assign(G.order, std::vector<std::optional<std::size_t>>(G.order));
    for (std::size_t a = 0; a < G.order; ++a)
      for (std::size_t b = 0; b < G.order; ++b) g.compose[a][b] = G.table[a][b];
    return g;
  }
};

/// kG: Delta(g)=g(x)g, eps(g)=1, S(g)=g^{-1}, alpha=id.
template <ExactField F>
WeakHomHopfAlgebra<F> group_algebra(const GroupPresentation& G, typename F::Context ctx = {}, std::string name = "kG") {
  G.validate();
  const auto n = G.order;
  LinearMap<F> mu({n, n}, {n}, ctx), eta({}, {n}, ctx), delta({n}, {n, n}, ctx), eps({n}, {}, ctx), S({n}, {n}, ctx);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mu.set(G.table[a][b], a * n + b, ctx.one());
    delta.set(a * n + a, a, ctx.one());
    eps.set(0, a, ctx.one());
    S.set(G.inverse[a], a, ctx.one());
  }
  eta.set(G.identity, 0, ctx.one());
  return WeakHomHopfAlgebra<F>(std::move(name), ctx, n, mu, eta, delta, eps, LinearMap<F>::identity({n}, ctx), S);
}

/// Groupoid algebra: gh = g∘h or 0, Delta(g)=g(x)g, eps(g)=1, S(g)=g^{-1},
/// 1 = sum of identity arrows, alpha=id.
template <ExactField F>
WeakHomHopfAlgebra<F> groupoid_algebra(const GroupoidPresentation& G, typename F::Context ctx = {},
                                       std::string name = "kG") {
  G.validate();
  const auto n = G.size();
  LinearMap<F> mu({n, n}, {n}, ctx), eta({}, {n}, ctx), delta({n}, {n, n}, ctx), eps({n}, {}, ctx), S({n}, {n}, ctx);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (G.compose[a][b]) mu.set(*G.compose[a][b], a * n + b, ctx.one());
    delta.set(a * n + a, a, ctx.one());
    eps.set(0, a, ctx.one());
    S.set(G.inverse_of(a), a, ctx.one());
  }
  for (std::size_t o = 0; o < G.objects; ++o) eta.set(*G.identity_of(o), 0, ctx.one());
  return WeakHomHopfAlgebra<F>(std::move(name), ctx, n, mu, eta, delta, eps, LinearMap<F>::identity({n}, ctx), S);
}

}  // namespace whh
