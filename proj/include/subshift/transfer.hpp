#ifndef SUBSHIFT_TRANSFER_HPP_
#define SUBSHIFT_TRANSFER_HPP_

#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "subshift/automaton.hpp"
#include "subshift/types.hpp"

namespace subshift {

// Automaton-state graph restricted to live states reachable from the root.
// Walks of length n from the root correspond bijectively to L~_n. The
// strongly connected component of maximal spectral radius is selected for
// all measure computations.
struct TransferSystem {
  const AvoidanceAutomaton* automaton = nullptr;
  std::vector<AvoidanceAutomaton::State> nodes;  // reachable live automaton states
  std::vector<int> node_of_state;                // automaton state -> node index, -1 if absent
  Eigen::SparseMatrix<double> adjacency;         // entry (s, t) = number of letters s -> t
  std::vector<std::vector<int>> components;      // SCCs, topological order
  std::vector<int> component_of;                 // node -> SCC index
  int chosen = -1;                               // index of the max-radius component
  std::vector<double> component_radius;
  bool radius_tie = false;

  int root_node() const { return node_of_state[automaton->root()]; }
  bool in_chosen(int node) const { return component_of[node] == chosen; }
};

// Throws "empty subshift" when no live state is reachable beyond a dead root.
TransferSystem build_transfer(const AvoidanceAutomaton& automaton);

struct PerronData {
  double lambda = 0.0;
  double lambda_lo = 0.0;   // Collatz-Wielandt enclosure from the final iterate
  double lambda_hi = 0.0;
  double residual = 0.0;    // ||M r - lambda r||_inf / ||r||_inf
  int iterations = 0;
  Eigen::VectorXd right;    // positive on the chosen component
  Eigen::VectorXd left;     // normalized so that left . right = 1
  double entropy() const;   // ln lambda
};

// Power iteration on (M + I) over the chosen component; periodic components
// converge because M + I is primitive for irreducible M.
PerronData perron(const TransferSystem& transfer, double tol = 1e-12, int max_iter = 1000000);

}  // namespace subshift

#endif  // SUBSHIFT_TRANSFER_HPP_
