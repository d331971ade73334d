// Generates the bundled corpus: every group of order <= 12 up to isomorphism
// as a multiplication table, together with all of its endomorphisms. The
// output is deterministic and checked into the repository.

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <utility>

#include "reidem/io.hpp"

namespace {

using namespace reidem;

struct RawGroup {
  std::string name;
  int order;
  std::vector<int> table;
  std::vector<std::string> names;
  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * order + b]; }
};

RawGroup cyclic(int n) {
  RawGroup g{"c" + std::to_string(n), n, {}, {}};
  g.table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    g.names.push_back(std::to_string(a));
  }
  return g;
}

RawGroup direct_product(const RawGroup& x, const RawGroup& y, const std::string& name) {
  int n = x.order * y.order;
  RawGroup g{name, n, std::vector<int>(static_cast<std::size_t>(n) * n), {}};
  auto idx = [&](int a, int b) { return a * y.order + b; };
  for (int a1 = 0; a1 < x.order; ++a1) {
    for (int b1 = 0; b1 < y.order; ++b1) {
      for (int a2 = 0; a2 < x.order; ++a2) {
        for (int b2 = 0; b2 < y.order; ++b2) {
          g.table[static_cast<std::size_t>(idx(a1, b1)) * n + idx(a2, b2)] =
              idx(x.mul(a1, a2), y.mul(b1, b2));
        }
      }
    }
  }
  for (int a = 0; a < x.order; ++a) {
    for (int b = 0; b < y.order; ++b) g.names.push_back(x.names[a] + "|" + y.names[b]);
  }
  return g;
}

// Order 2n: r^i s^j with s r s = r^-1.
RawGroup dihedral(int n, const std::string& name) {
  int order = 2 * n;
  RawGroup g{name, order, std::vector<int>(static_cast<std::size_t>(order) * order), {}};
  auto idx = [&](int i, int j) { return j * n + i; };
  for (int j1 = 0; j1 < 2; ++j1) {
    for (int i1 = 0; i1 < n; ++i1) {
      for (int j2 = 0; j2 < 2; ++j2) {
        for (int i2 = 0; i2 < n; ++i2) {
          int i = j1 == 0 ? (i1 + i2) % n : ((i1 - i2) % n + n) % n;
          g.table[static_cast<std::size_t>(idx(i1, j1)) * order + idx(i2, j2)] =
              idx(i, (j1 + j2) % 2);
        }
      }
    }
  }
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < n; ++i) g.names.push_back("r" + std::to_string(i) + (j ? "s" : ""));
  }
  return g;
}

// Order 4n: a^i b^j with a^(2n) = 1, b^2 = a^n, b a b^-1 = a^-1.
RawGroup dicyclic(int n, const std::string& name) {
  int order = 4 * n;
  int an = 2 * n;
  RawGroup g{name, order, std::vector<int>(static_cast<std::size_t>(order) * order), {}};
  auto idx = [&](int i, int j) { return j * an + i; };
  for (int j1 = 0; j1 < 2; ++j1) {
    for (int i1 = 0; i1 < an; ++i1) {
      for (int j2 = 0; j2 < 2; ++j2) {
        for (int i2 = 0; i2 < an; ++i2) {
          int target;
          if (j1 == 0) {
            target = idx((i1 + i2) % an, j2);
          } else if (j2 == 0) {
            target = idx(((i1 - i2) % an + an) % an, 1);
          } else {
            target = idx(((i1 - i2 + n) % an + an) % an, 0);
          }
          g.table[static_cast<std::size_t>(idx(i1, j1)) * order + idx(i2, j2)] = target;
        }
      }
    }
  }
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < an; ++i) g.names.push_back("a" + std::to_string(i) + (j ? "b" : ""));
  }
  return g;
}

RawGroup alternating4() {
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
    }
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  int n = static_cast<int>(perms.size());
  RawGroup g{"a4", n, std::vector<int>(static_cast<std::size_t>(n) * n), {}};
  auto find = [&](const std::array<int, 4>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::array<int, 4> composed;
      for (int i = 0; i < 4; ++i) composed[i] = perms[a][perms[b][i]];
      g.table[static_cast<std::size_t>(a) * n + b] = find(composed);
    }
  }
  for (const auto& q : perms) {
    std::string s;
    for (int v : q) s += std::to_string(v);
    g.names.push_back(s);
  }
  return g;
}

// Smallest generating set in lexicographic subset order.
std::vector<int> generating_set(const RawGroup& g) {
  auto closure_is_all = [&](const std::vector<int>& gens) {
    std::vector<bool> in(g.order, false);
    std::vector<int> stack;
    int identity = 0;
    for (int e = 0; e < g.order; ++e) {
      bool ok = true;
      for (int x = 0; x < g.order && ok; ++x) ok = g.mul(e, x) == x;
      if (ok) {
        identity = e;
        break;
      }
    }
    in[identity] = true;
    stack.push_back(identity);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int h : gens) {
        int y = g.mul(x, h);
        if (!in[y]) {
          in[y] = true;
          stack.push_back(y);
        }
      }
    }
    return std::all_of(in.begin(), in.end(), [](bool b) { return b; });
  };

  for (int a = 0; a < g.order; ++a) {
    if (closure_is_all({a})) return {a};
  }
  for (int a = 0; a < g.order; ++a) {
    for (int b = a + 1; b < g.order; ++b) {
      if (closure_is_all({a, b})) return {a, b};
    }
  }
  for (int a = 0; a < g.order; ++a) {
    for (int b = a + 1; b < g.order; ++b) {
      for (int c = b + 1; c < g.order; ++c) {
        if (closure_is_all({a, b, c})) return {a, b, c};
      }
    }
  }
  throw Error("no generating set of size <= 3 found for " + g.name);
}

// All homomorphisms G -> G, enumerated over generator images and verified on
// every pair.
std::vector<std::vector<int>> all_endomorphisms(const RawGroup& g) {
  std::vector<int> gens = generating_set(g);
  int k = static_cast<int>(gens.size());
  int n = g.order;

  int identity = 0;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) {
      identity = e;
      break;
    }
  }

  // Spanning tree: element -> (previous element, generator slot).
  std::vector<std::pair<int, int>> derivation(n, {-1, -1});
  std::vector<int> bfs_order{identity};
  derivation[identity] = {identity, -1};
  for (std::size_t head = 0; head < bfs_order.size(); ++head) {
    int x = bfs_order[head];
    for (int slot = 0; slot < k; ++slot) {
      int y = g.mul(x, gens[slot]);
      if (derivation[y].first < 0) {
        derivation[y] = {x, slot};
        bfs_order.push_back(y);
      }
    }
  }

  std::vector<std::vector<int>> maps;
  std::vector<int> images(k, 0);
  for (;;) {
    std::vector<int> f(n, -1);
    f[identity] = identity;
    for (int x : bfs_order) {
      if (x == identity) continue;
      auto [prev, slot] = derivation[x];
      f[x] = g.mul(f[prev], images[slot]);
    }
    bool hom = true;
    for (int x = 0; x < n && hom; ++x) {
      for (int y = 0; y < n && hom; ++y) hom = f[g.mul(x, y)] == g.mul(f[x], f[y]);
    }
    if (hom) maps.push_back(f);

    int pos = k - 1;
    while (pos >= 0 && images[pos] == n - 1) images[pos--] = 0;
    if (pos < 0) break;
    ++images[pos];
  }
  std::sort(maps.begin(), maps.end());
  return maps;
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path out_dir = argc > 1 ? argv[1] : "corpus";
  std::filesystem::create_directories(out_dir / "groups");
  std::filesystem::create_directories(out_dir / "endos");

  std::vector<RawGroup> groups;
  for (int n = 1; n <= 12; ++n) groups.push_back(cyclic(n));
  groups.push_back(direct_product(cyclic(2), cyclic(2), "c2xc2"));
  groups.push_back(direct_product(cyclic(4), cyclic(2), "c4xc2"));
  groups.push_back(direct_product(direct_product(cyclic(2), cyclic(2), "x"), cyclic(2), "c2xc2xc2"));
  groups.push_back(direct_product(cyclic(3), cyclic(3), "c3xc3"));
  groups.push_back(direct_product(cyclic(6), cyclic(2), "c6xc2"));
  groups.push_back(dihedral(3, "s3"));
  groups.push_back(dihedral(4, "d4"));
  groups.push_back(dihedral(5, "d5"));
  groups.push_back(dihedral(6, "d6"));
  groups.push_back(dicyclic(2, "q8"));
  groups.push_back(dicyclic(3, "dic3"));
  groups.push_back(alternating4());

  Json index;
  index["groups"] = Json::array();

  long long total_endos = 0, total_autos = 0;
  for (const RawGroup& raw : groups) {
    // Route through the library so the full group law is re-verified.
    FiniteGroup group(raw.order, raw.table, raw.names);
    std::vector<std::vector<int>> maps = all_endomorphisms(raw);

    long long autos = 0;
    for (const auto& map : maps) {
      FiniteEndomorphism endo(group, map);  // verifies the homomorphism law
      if (endo.is_bijective()) ++autos;
    }

    Json gj = finite_group_to_json(group);
    gj["name"] = raw.name;
    write_json(out_dir / "groups" / (raw.name + ".json"), gj);

    Json ej;
    ej["group"] = raw.name;
    ej["maps"] = maps;
    write_json(out_dir / "endos" / (raw.name + ".json"), ej);

    index["groups"].push_back(raw.name);
    total_endos += static_cast<long long>(maps.size());
    total_autos += autos;
    std::cout << raw.name << ": order " << raw.order << ", " << maps.size() << " endomorphisms, "
              << autos << " automorphisms\n";
  }
  write_json(out_dir / "index.json", index);
  std::cout << "total: " << groups.size() << " groups, " << total_endos << " endomorphisms, "
            << total_autos << " automorphisms\n";
  return 0;
}
