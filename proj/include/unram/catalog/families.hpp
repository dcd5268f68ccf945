#pragma once

#include <string>
#include <vector>

#include "unram/group/mat_group.hpp"

namespace unram::catalog {

using group::IntMatrix;
using group::MatGroup;

// Generator pairs (sigma, tau) of the parameterized lattices. The closing
// constructors below verify the defining relations and the group order.
std::vector<IntMatrix> d4n_generators(int n);
std::vector<IntMatrix> qd8n_generators(int n);
std::vector<IntMatrix> q8n_generators(int n);  // sigma^2, sigma*tau
std::vector<IntMatrix> cp2p_generators(int p);

MatGroup family_d4n(int n);
MatGroup family_qd8n(int n);
MatGroup family_q8n(int n);
MatGroup family_cp2p(int p);

// Dispatch on a family name: d4n, qd8n, q8n, cp2p.
MatGroup family(const std::string& name, int n);
std::vector<std::string> family_names();

std::vector<IntMatrix> builtin_generators(const std::string& name);
MatGroup builtin(const std::string& name);
// Stable builtin identifiers; sign_diag_n stands for sign_diag_1 ... sign_diag_7.
std::vector<std::string> builtin_names();

MatGroup a6_norm1();
std::vector<IntMatrix> a6_norm1_generators();

}  // namespace unram::catalog
