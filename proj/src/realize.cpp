#include "qpts/realize.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <optional>
#include <thread>

#include "qpts/char_lattice.hpp"
#include "qpts/point_variety.hpp"
#include "qpts/subtorus.hpp"

namespace qpts {

namespace {

struct Attempt {
  std::optional<QMatrix> matrix;
  std::string diagnostic;
};

Attempt fail(std::string why) { return {std::nullopt, std::move(why)}; }

RealizationResult finish(const QMatrix& q, const Collection& target, RealizationMethod method,
                         std::string diagnostic = {}) {
  RealizationResult r;
  r.matrix = q;
  r.target = target;
  r.achieved = good_triples(q).complement();
  r.success = r.achieved == r.target;
  r.method = r.success ? method : RealizationMethod::kNone;
  r.diagnostic = std::move(diagnostic);
  if (!r.success)
    r.diagnostic += (r.diagnostic.empty() ? "" : "; ") + std::string("achieved ") +
                    r.achieved.to_string() + " != target " + target.to_string();
  return r;
}

// q_ij = f_i^{-1} f_j with f_0 = 1 and fresh f_1..f_n.
QMatrix rank_one(int n, GeneratorSupply& supply) {
  std::vector<std::size_t> f(static_cast<std::size_t>(n + 1), 0);
  for (int v = 1; v <= n; ++v) f[static_cast<std::size_t>(v)] = supply.fresh();
  TablePtr table = supply.table();
  auto factor = [&](int v) {
    return v == 0 ? GroupScalar::one(table) : GroupScalar::generator(table, f[static_cast<std::size_t>(v)]);
  };
  std::vector<GroupScalar> upper;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) upper.push_back(factor(j) / factor(i));
  return QMatrix(n, table, std::move(upper));
}

// Moves p to 0 and r to n, keeping the remaining indices in order.
Permutation ends_permutation(int n, int p, int r) {
  std::vector<int> image(static_cast<std::size_t>(n + 1));
  image[static_cast<std::size_t>(p)] = 0;
  image[static_cast<std::size_t>(r)] = n;
  int next = 1;
  for (int v = 0; v <= n; ++v)
    if (v != p && v != r) image[static_cast<std::size_t>(v)] = next++;
  return Permutation(std::move(image));
}

Attempt construct(const Collection& c, GeneratorSupply& supply);

// Induction step with the line P(0,n) already in >= n-2 members of c.
Attempt extend_over_line(const Collection& c, GeneratorSupply& supply) {
  const int n = c.n();
  Collection first(n - 1);   // members avoiding n, on variables 0..n-1
  Collection with_n(n);      // members through n but not 0
  std::vector<bool> bad_through_line(static_cast<std::size_t>(n), false);
  int line_members = 0;
  for (const auto& t : c) {
    if (t.k != n) {
      first.insert(t);
    } else if (t.i != 0) {
      with_n.insert(t);
    } else {
      bad_through_line[static_cast<std::size_t>(t.j)] = true;
      ++line_members;
    }
  }
  if (line_members < n - 2) return fail("line P(0,n) lies in fewer than n-2 members");

  Attempt sub = construct(first, supply);
  if (!sub.matrix) return fail("first subproblem: " + sub.diagnostic);
  const QMatrix& p = *sub.matrix;

  // Column n on rows 1..n-1: (i,j,n) is rank one iff y_i = q_ij y_j.
  std::vector<std::optional<GroupScalar>> y(static_cast<std::size_t>(n));
  auto edge = [&](int i, int j) { return !with_n.contains(Triple::sorted(i, j, n)); };
  for (int root = 1; root < n; ++root) {
    if (y[static_cast<std::size_t>(root)]) continue;
    std::size_t g = supply.fresh();
    y[static_cast<std::size_t>(root)] = GroupScalar::generator(supply.table(), g);
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j = 1; j < n; ++j) {
        if (j == i || !edge(i, j)) continue;
        GroupScalar want = p.entry(i, j).inverse() * *y[static_cast<std::size_t>(i)];
        auto& yj = y[static_cast<std::size_t>(j)];
        if (!yj) {
          yj = want;
          queue.push_back(j);
        } else if (!(*yj == want)) {
          return fail("column for variable n inconsistent around (" + std::to_string(i) + "," +
                      std::to_string(j) + "," + std::to_string(n) + ")");
        }
      }
    }
  }

  GroupScalar x = GroupScalar::generator(supply.table(), supply.fresh());
  TablePtr table = supply.table();
  GroupScalar lambda = GroupScalar::one(table);
  if (line_members == n - 2) {
    int missing = 1;
    while (bad_through_line[static_cast<std::size_t>(missing)]) ++missing;
    lambda = p.entry(0, missing).inverse() * y[static_cast<std::size_t>(missing)]->inverse() * x;
  }

  std::vector<GroupScalar> upper;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (j < n)
        upper.push_back(p.entry(i, j));
      else if (i == 0)
        upper.push_back(x);
      else
        upper.push_back(lambda * *y[static_cast<std::size_t>(i)]);
    }
  QMatrix q(n, table, std::move(upper));
  Collection achieved = good_triples(q).complement();
  if (achieved != c)
    return fail("merge produced " + achieved.to_string() + " instead of " + c.to_string());
  return {q, {}};
}

Attempt construct(const Collection& c, GeneratorSupply& supply) {
  const int n = c.n();
  if (c.empty()) return {rank_one(n, supply), {}};
  if (!is_adequate(c)) return fail("subcollection " + c.to_string() + " not adequate");
  if (!is_dense(c)) return fail("subcollection " + c.to_string() + " neither dense nor empty");

  std::vector<int> counts(static_cast<std::size_t>(pair_count(n)), 0);
  for (const auto& t : c) {
    ++counts[static_cast<std::size_t>(pair_index(t.i, t.j, n))];
    ++counts[static_cast<std::size_t>(pair_index(t.i, t.k, n))];
    ++counts[static_cast<std::size_t>(pair_index(t.j, t.k, n))];
  }
  std::vector<int> order;
  for (int pi = 0; pi < pair_count(n); ++pi)
    if (counts[static_cast<std::size_t>(pi)] >= n - 2) order.push_back(pi);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return counts[static_cast<std::size_t>(a)] > counts[static_cast<std::size_t>(b)];
  });

  // Any dense line may serve; try each (in both orientations) until one merges.
  std::string diagnostics;
  for (int pi : order) {
    auto [a, b] = pair_at(pi, n);
    for (auto [p, r] : {std::pair{a, b}, std::pair{b, a}}) {
      Permutation sigma = ends_permutation(n, p, r);
      GeneratorSupply trial = supply;
      Attempt step = extend_over_line(sigma.apply(c), trial);
      if (step.matrix) {
        supply = trial;
        return {step.matrix->relabeled(sigma.inverse()), {}};
      }
      diagnostics += (diagnostics.empty() ? "" : " | ") + std::string("line (") +
                     std::to_string(p) + "," + std::to_string(r) + "): " + step.diagnostic;
    }
  }
  return fail(diagnostics);
}

void check_realizable_input(const Collection& c) {
  if (c.n() > 5) throw std::invalid_argument("realization supports n <= 5");
  if (!is_adequate(c)) throw NotAdequate("collection " + c.to_string() + " is not adequate");
}

}  // namespace

const char* to_string(RealizationMethod method) {
  switch (method) {
    case RealizationMethod::kRankOne: return "rank-one";
    case RealizationMethod::kInductive: return "inductive";
    case RealizationMethod::kStoredA: return "stored-A";
    case RealizationMethod::kStoredB: return "stored-B";
    case RealizationMethod::kLattice: return "lattice";
    case RealizationMethod::kNone: return "none";
  }
  return "none";
}

QMatrix matrix_for_collection_a() {
  TablePtr table = make_table({"x"}, 2);
  QMatrix q = QMatrix::ones(5, table);
  GroupScalar x = GroupScalar::generator(table, 0);
  for (int i : {0, 1})
    for (int j : {4, 5}) q = q.with_entry(i, j, x);
  return q;
}

QMatrix matrix_for_collection_b() {
  TablePtr table = make_table({}, 2);
  QMatrix q = QMatrix::ones(5, table);
  GroupScalar minus = GroupScalar::root_of_unity(table, 1);
  for (auto [i, j] : {std::pair{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}) q = q.with_entry(i, j, minus);
  return q;
}

RealizationResult realize(const Collection& c) {
  check_realizable_input(c);
  GeneratorSupply supply(make_table({}, 2));
  if (c.empty()) return finish(rank_one(c.n(), supply), c, RealizationMethod::kRankOne);

  if (!is_dense(c)) {
    if (auto p = find_isomorphism(c, collection_a()))
      return finish(matrix_for_collection_a().relabeled(p->inverse()), c, RealizationMethod::kStoredA);
    if (auto p = find_isomorphism(c, collection_b()))
      return finish(matrix_for_collection_b().relabeled(p->inverse()), c, RealizationMethod::kStoredB);
    RealizationResult r;
    r.target = c;
    r.achieved = TripleSet(c.n());
    r.diagnostic = "adequate but neither dense nor a stored class";
    return r;
  }

  Attempt attempt = construct(c, supply);
  if (!attempt.matrix) {
    RealizationResult r;
    r.target = c;
    r.achieved = TripleSet(c.n());
    r.diagnostic = attempt.diagnostic;
    TripleSet good = c.complement();
    TripleSet forced = closure(good) - good;
    if (!forced.empty())
      r.diagnostic = "obstruction: the good triples force " + forced.to_string() + "; " + r.diagnostic;
    return r;
  }
  return finish(*attempt.matrix, c, RealizationMethod::kInductive);
}

RealizationResult realize_via_lattice(const Collection& c) {
  check_realizable_input(c);
  TripleSet good = c.complement();
  TripleSet closed = closure(good);
  if (closed != good) {
    RealizationResult r;
    r.target = c;
    r.achieved = closed.complement();
    r.diagnostic = "good set not closed: forces " + (closed - good).to_string();
    return r;
  }
  try {
    return finish(generic_point_of_node(closed), c, RealizationMethod::kLattice);
  } catch (const RealizationFailure& e) {
    RealizationResult r;
    r.target = c;
    r.achieved = TripleSet(c.n());
    r.diagnostic = e.what();
    return r;
  }
}

RealizationSummary realize_all(int n, unsigned threads) {
  OrbitCatalog catalog = enumerate_adequate(n, threads);
  RealizationSummary summary;
  summary.n = n;
  summary.classes.resize(catalog.orbits.size());
  threads = std::max(1U, threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w)
      workers.emplace_back([&, w] {
        for (std::size_t k = w; k < catalog.orbits.size(); k += threads) {
          const auto& entry = catalog.orbits[k];
          summary.classes[k] = {entry.representative, entry.orbit_size, entry.dense,
                                realize(entry.representative)};
        }
      });
  }
  for (const auto& cls : summary.classes) summary.successes += cls.result.success ? 1 : 0;
  return summary;
}

QMatrix generic_point_of_node(const TripleSet& closed_set) {
  const int n = closed_set.n();
  IntMatrix rows;
  for (const auto& t : closed_set) rows.push_back(triple_char(t, n).coords);
  Subtorus locus = solve_characters(n, rows);
  const std::int64_t modulus = lcm64(2, locus.modulus);
  for (const auto& label : locus.coset_labels()) {
    GeneratorSupply supply(make_table({}, modulus));
    QMatrix q = locus.point(label, supply);
    if (good_triples(q) == closed_set) return q;
  }
  throw RealizationFailure("no component of V(J) has good set exactly " + closed_set.to_string());
}

}  // namespace qpts
