#include "subshift/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>

#include "subshift/language.hpp"

namespace subshift {

namespace {

// Iterative Tarjan SCC over the node graph.
std::vector<std::vector<int>> tarjan_scc(const std::vector<std::vector<int>>& out_edges) {
  const int n = static_cast<int>(out_edges.size());
  std::vector<int> index(n, -1), low(n, 0), on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> sccs;
  int next_index = 0;

  struct Frame {
    int v;
    std::size_t child;
  };
  for (int start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = low[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < out_edges[f.v].size()) {
        int w = out_edges[f.v][f.child++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          std::vector<int> comp;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp.push_back(w);
            if (w == v) break;
          }
          std::sort(comp.begin(), comp.end());
          sccs.push_back(std::move(comp));
        }
      }
    }
  }
  // Tarjan emits SCCs in reverse topological order.
  std::reverse(sccs.begin(), sccs.end());
  return sccs;
}

// Spectral radius of the submatrix on one component, by power iteration on
// (M + I). Small components converge in a handful of iterations.
double component_radius(const Eigen::SparseMatrix<double>& adj, const std::vector<int>& comp) {
  if (comp.size() == 1) {
    double self = adj.coeff(comp[0], comp[0]);
    return self;  // 0 when there is no self-loop
  }
  std::vector<int> pos(adj.rows(), -1);
  for (int i = 0; i < static_cast<int>(comp.size()); ++i) pos[comp[i]] = i;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(comp.size(), comp.size());
  for (int i = 0; i < static_cast<int>(comp.size()); ++i)
    for (Eigen::SparseMatrix<double>::InnerIterator it(adj, comp[i]); it; ++it)
      if (pos[it.row()] >= 0) m(pos[it.row()], pos[comp[i]]) = it.value();
  Eigen::VectorXd v = Eigen::VectorXd::Ones(comp.size());
  double lam = 0.0;
  for (int iter = 0; iter < 20000; ++iter) {
    Eigen::VectorXd w = m * v + v;
    double norm = w.maxCoeff();
    w /= norm;
    if ((w - v).lpNorm<Eigen::Infinity>() < 1e-14) {
      v = w;
      lam = norm - 1.0;
      break;
    }
    v = w;
    lam = norm - 1.0;
  }
  return lam;
}

}  // namespace

TransferSystem build_transfer(const AvoidanceAutomaton& automaton) {
  TransferSystem t;
  t.automaton = &automaton;
  const int q = automaton.alphabet().size();

  // Live states reachable from the root.
  std::vector<int> node(automaton.live_states(), -1);
  std::deque<AvoidanceAutomaton::State> queue{automaton.root()};
  node[automaton.root()] = 0;
  t.nodes.push_back(automaton.root());
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < q; ++a) {
      auto u = automaton.step(s, a);
      if (u == AvoidanceAutomaton::kDead || node[u] != -1) continue;
      node[u] = static_cast<int>(t.nodes.size());
      t.nodes.push_back(u);
      queue.push_back(u);
    }
  }
  t.node_of_state = std::move(node);

  const int n = static_cast<int>(t.nodes.size());
  std::vector<Eigen::Triplet<double>> trips;
  std::vector<std::vector<int>> out_edges(n);
  for (int i = 0; i < n; ++i) {
    for (Letter a = 0; a < q; ++a) {
      auto u = automaton.step(t.nodes[i], a);
      if (u == AvoidanceAutomaton::kDead) continue;
      int j = t.node_of_state[u];
      trips.emplace_back(j, i, 1.0);  // column i holds the out-edges of node i
      out_edges[i].push_back(j);
    }
  }
  t.adjacency.resize(n, n);
  t.adjacency.setFromTriplets(trips.begin(), trips.end());

  t.components = tarjan_scc(out_edges);
  t.component_of.assign(n, -1);
  for (int c = 0; c < static_cast<int>(t.components.size()); ++c)
    for (int v : t.components[c]) t.component_of[v] = c;

  bool any_edge = false;
  for (auto& e : out_edges)
    if (!e.empty()) any_edge = true;
  if (!any_edge) throw SubshiftError("empty subshift");

  t.component_radius.resize(t.components.size());
  for (int c = 0; c < static_cast<int>(t.components.size()); ++c)
    t.component_radius[c] = component_radius(t.adjacency, t.components[c]);
  // Max radius; ties broken by first in topological order (and reported).
  t.chosen = 0;
  for (int c = 1; c < static_cast<int>(t.components.size()); ++c) {
    if (t.component_radius[c] > t.component_radius[t.chosen] + 1e-9) t.chosen = c;
    else if (std::abs(t.component_radius[c] - t.component_radius[t.chosen]) <= 1e-9)
      t.radius_tie = true;
  }
  if (t.component_radius[t.chosen] <= 0) throw SubshiftError("empty subshift");

  // Walk/word bijection cross-check at n = 6.
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
  e(t.root_node()) = 1.0;
  for (int i = 0; i < 6; ++i) e = t.adjacency * e;
  double walks = e.sum();
  BigInt words = count_language(automaton, 6);
  if (std::abs(walks - static_cast<double>(words.convert_to<double>())) > 1e-6 * (1 + walks))
    throw SubshiftError("transfer graph disagrees with language counts at n = 6");
  return t;
}

double PerronData::entropy() const { return std::log(lambda); }

PerronData perron(const TransferSystem& transfer, double tol, int max_iter) {
  if (transfer.chosen < 0 || transfer.components.empty())
    throw SubshiftError("choose component first");
  const auto& comp = transfer.components[transfer.chosen];
  const int k = static_cast<int>(comp.size());
  std::vector<int> pos(transfer.adjacency.rows(), -1);
  for (int i = 0; i < k; ++i) pos[comp[i]] = i;

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i)
    for (Eigen::SparseMatrix<double>::InnerIterator it(transfer.adjacency, comp[i]); it; ++it)
      if (pos[it.row()] >= 0) m(pos[it.row()], pos[comp[i]]) += it.value();

  auto iterate = [&](const Eigen::MatrixXd& mat, PerronData& out, Eigen::VectorXd& vec) {
    Eigen::VectorXd v = Eigen::VectorXd::Ones(k);
    v /= v.maxCoeff();
    int iter = 0;
    for (; iter < max_iter; ++iter) {
      Eigen::VectorXd w = mat * v;
      Eigen::VectorXd q = (w + v).cwiseQuotient(v);  // Collatz-Wielandt on M + I
      double qmin = q.minCoeff(), qmax = q.maxCoeff();
      v = (w + v) / (w + v).maxCoeff();
      if (qmax - qmin < tol) {
        out.lambda_lo = qmin - 1.0;
        out.lambda_hi = qmax - 1.0;
        out.iterations = iter + 1;
        vec = v;
        return true;
      }
    }
    return false;
  };

  PerronData out;
  Eigen::VectorXd right;
  if (!iterate(m, out, right))
    throw SubshiftError("increase iterations or handle periodicity: power iteration stalled");
  PerronData left_data;
  Eigen::VectorXd left;
  Eigen::MatrixXd mt = m.transpose();
  if (!iterate(mt, left_data, left))
    throw SubshiftError("increase iterations or handle periodicity: power iteration stalled");

  out.lambda = 0.5 * (out.lambda_lo + out.lambda_hi);
  Eigen::VectorXd mr = m * right;
  out.residual = (mr - out.lambda * right).lpNorm<Eigen::Infinity>() /
                 right.lpNorm<Eigen::Infinity>();
  double scale = left.dot(right);
  left /= scale;  // left . right = 1

  // Scatter back to node indexing (zero off the component).
  out.right = Eigen::VectorXd::Zero(transfer.adjacency.rows());
  out.left = Eigen::VectorXd::Zero(transfer.adjacency.rows());
  for (int i = 0; i < k; ++i) {
    out.right(comp[i]) = right(i);
    out.left(comp[i]) = left(i);
  }
  return out;
}

}  // namespace subshift
