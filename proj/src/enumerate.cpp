// Spherical bitrade enumeration through the permutation representation:
// the W-triples are points 0..n-1, rows are the cycles of tau_row, columns
// the cycles of tau_col and symbols the cycles of tau_sym = tau_col o tau_row^-1.
// Point x carries the white triple (row x, col x, sym x) and the black
// triple (row x, col x, sym(tau_row x)).

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "trinity/error.hpp"
#include "trinity/latin.hpp"

namespace trinity {

namespace {

using ITriple = std::array<int, 3>;
using IForm = std::pair<std::vector<ITriple>, std::vector<ITriple>>;

// Index of the triple in `half` agreeing with t off coordinate `omit`.
int partner(const std::vector<ITriple>& half, const ITriple& t, int omit) {
  const int a = (omit + 1) % 3, b = (omit + 2) % 3;
  for (std::size_t i = 0; i < half.size(); ++i)
    if (half[i][a] == t[a] && half[i][b] == t[b]) return static_cast<int>(i);
  return -1;
}

IForm normalize(const std::vector<ITriple>& w, const std::vector<ITriple>& b) {
  const int n = static_cast<int>(w.size());
  // Node i < n is W[i]; node n + i is B[i].
  std::vector<std::array<int, 3>> nbr(2 * n);
  for (int i = 0; i < n; ++i)
    for (int o = 0; o < 3; ++o) {
      nbr[i][o] = n + partner(b, w[i], o);
      nbr[n + i][o] = partner(w, b[i], o);
    }
  auto node = [&](int x) -> const ITriple& { return x < n ? w[x] : b[x - n]; };
  std::array<int, 3> maxlabel{0, 0, 0};
  for (const auto& t : w)
    for (int k = 0; k < 3; ++k) maxlabel[k] = std::max(maxlabel[k], t[k] + 1);

  IForm best;
  bool have = false;
  std::vector<int> queue(2 * n);
  for (int start = 0; start < n; ++start) {
    std::array<std::vector<int>, 3> relabel;
    std::array<int, 3> next{0, 0, 0};
    for (int k = 0; k < 3; ++k) relabel[k].assign(maxlabel[k], -1);
    std::vector<bool> seen(2 * n, false);
    int head = 0, tail = 0;
    queue[tail++] = start;
    seen[start] = true;
    while (head < tail) {
      const int x = queue[head++];
      for (int k = 0; k < 3; ++k) {
        int& l = relabel[k][node(x)[k]];
        if (l < 0) l = next[k]++;
      }
      for (int o = 0; o < 3; ++o) {
        const int y = nbr[x][o];
        if (!seen[y]) seen[y] = true, queue[tail++] = y;
      }
    }
    IForm form;
    for (int i = 0; i < n; ++i) {
      form.first.push_back({relabel[0][w[i][0]], relabel[1][w[i][1]], relabel[2][w[i][2]]});
      form.second.push_back({relabel[0][b[i][0]], relabel[1][b[i][1]], relabel[2][b[i][2]]});
    }
    std::sort(form.first.begin(), form.first.end());
    std::sort(form.second.begin(), form.second.end());
    if (!have || form < best) best = std::move(form), have = true;
  }
  return best;
}

LatinBitrade to_bitrade(const IForm& f) {
  const char prefix[3] = {'r', 'c', 's'};
  auto convert = [&](const std::vector<ITriple>& half) {
    std::vector<Triple> out;
    for (const auto& t : half) {
      Triple s;
      for (int k = 0; k < 3; ++k) s[k] = prefix[k] + std::to_string(t[k]);
      out.push_back(s);
    }
    return out;
  };
  return LatinBitrade(convert(f.first), convert(f.second));
}

bool latin_ints(const std::vector<ITriple>& half) {
  for (std::size_t i = 0; i < half.size(); ++i)
    for (std::size_t j = i + 1; j < half.size(); ++j) {
      const int agree = (half[i][0] == half[j][0]) + (half[i][1] == half[j][1]) + (half[i][2] == half[j][2]);
      if (agree > 1) return false;
    }
  return true;
}

// Cycle id per point; returns the cycle count, or -1 on a fixed point.
int cycle_ids(const std::vector<int>& perm, std::vector<int>& id) {
  const int n = static_cast<int>(perm.size());
  id.assign(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (id[s] >= 0) continue;
    if (perm[s] == s) return -1;
    for (int x = s; id[x] < 0; x = perm[x]) id[x] = count;
    ++count;
  }
  return count;
}

// Partitions of n into parts >= 2, parts non-increasing.
void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 2; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

class Worker {
 public:
  Worker(const std::vector<int>& row_perm, int parts) : row_(row_perm), parts_(parts), n_(static_cast<int>(row_perm.size())) {
    row_inv_.resize(n_);
    for (int x = 0; x < n_; ++x) row_inv_[row_[x]] = x;
    cycle_ids(row_, row_id_);
  }

  // All fixed-point-free tau_col with tau_col(0) = first.
  void run(int first, std::set<IForm>& out) {
    col_.assign(n_, -1);
    used_.assign(n_, false);
    col_[0] = first;
    used_[first] = true;
    extend(1, out);
  }

 private:
  void extend(int x, std::set<IForm>& out) {
    if (x == n_) {
      consider(out);
      return;
    }
    for (int y = 0; y < n_; ++y) {
      if (used_[y] || y == x) continue;
      col_[x] = y;
      used_[y] = true;
      extend(x + 1, out);
      used_[y] = false;
    }
    col_[x] = -1;
  }

  void consider(std::set<IForm>& out) {
    const int cols = cycle_ids(col_, col_id_);
    if (cols < 0) return;
    std::vector<int> sym(n_);
    for (int y = 0; y < n_; ++y) sym[y] = col_[row_inv_[y]];
    const int syms = cycle_ids(sym, sym_id_);
    if (syms < 0 || parts_ + cols + syms != n_ + 2) return;

    // Transitivity of <tau_row, tau_col>.
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int comps = n_;
    for (int x = 0; x < n_; ++x)
      for (int y : {row_[x], col_[x]}) {
        int a = find(x), c = find(y);
        if (a != c) parent[a] = c, --comps;
      }
    if (comps != 1) return;

    std::vector<ITriple> w(n_), b(n_);
    for (int x = 0; x < n_; ++x) {
      w[x] = {row_id_[x], col_id_[x], sym_id_[x]};
      b[x] = {row_id_[x], col_id_[x], sym_id_[row_[x]]};
    }
    if (!latin_ints(w) || !latin_ints(b)) return;
    std::set<ITriple> ws(w.begin(), w.end());
    for (const auto& t : b)
      if (ws.count(t)) return;
    out.insert(normalize(w, b));
  }

  const std::vector<int>& row_;
  int parts_;
  int n_;
  std::vector<int> row_inv_, row_id_, col_, col_id_, sym_id_;
  std::vector<bool> used_;
};

}  // namespace

LatinBitrade normalized_form(const LatinBitrade& x) {
  std::array<std::map<std::string, int>, 3> index;
  for (int k = 0; k < 3; ++k) {
    const auto labels = x.labels(k);
    for (std::size_t i = 0; i < labels.size(); ++i) index[k][labels[i]] = static_cast<int>(i);
  }
  auto convert = [&](const PartialLatinSquare& half) {
    std::vector<ITriple> out;
    for (const auto& t : half.triples()) out.push_back({index[0].at(t[0]), index[1].at(t[1]), index[2].at(t[2])});
    return out;
  };
  return to_bitrade(normalize(convert(x.W()), convert(x.B())));
}

EnumerationResult enumerate_spherical_bitrades(std::size_t max_size, const EnumerationOptions& options) {
  if (max_size > options.bound)
    throw Error(ErrorKind::BoundExceeded,
                "max size " + std::to_string(max_size) + " exceeds bound " + std::to_string(options.bound));
  std::set<IForm> forms;
  std::mutex mutex;
  for (int n = 4; n <= static_cast<int>(max_size); ++n) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(n, n, cur, parts);
    for (const auto& part : parts) {
      // Canonical tau_row: consecutive points form each cycle.
      std::vector<int> row(n);
      int base = 0;
      for (int len : part) {
        for (int i = 0; i < len; ++i) row[base + i] = base + (i + 1) % len;
        base += len;
      }
      const int threads = static_cast<int>(std::max<std::size_t>(1, options.threads));
      std::vector<std::thread> pool;
      auto job = [&](int t) {
        std::set<IForm> local;
        Worker worker(row, static_cast<int>(part.size()));
        for (int first = 1 + t; first < n; first += threads) worker.run(first, local);
        std::lock_guard lock(mutex);
        forms.insert(local.begin(), local.end());
      };
      if (threads == 1) job(0);
      else {
        for (int t = 0; t < threads; ++t) pool.emplace_back(job, t);
        for (auto& th : pool) th.join();
      }
    }
  }

  EnumerationResult result;
  for (const auto& f : forms) result.bitrades.push_back(to_bitrade(f));
  std::stable_sort(result.bitrades.begin(), result.bitrades.end(),
                   [](const LatinBitrade& a, const LatinBitrade& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  for (const auto& x : result.bitrades) {
    if (!connectedness(x) || !separation(x).separated || bitrade_genus(x) != 0)
      throw Error(ErrorKind::NotABitrade, "enumerator produced a candidate failing re-validation");
    ++result.group_tally[canonical_group(x.W()).group.torsion()];
    ++result.size_tally[x.size()];
  }
  return result;
}

}  // namespace trinity
