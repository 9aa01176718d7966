#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kpack/edge_groups.hpp"
#include "kpack/graph.hpp"

namespace kpack::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the kpack binary and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One edge "u v" per line, 0-indexed; "#" starts a comment.
Matching parse_matching(std::istream& in);
Matching load_matching_file(const std::string& path);
void save_matching(std::ostream& out, const Matching& m);

/// One group per line: matching edge indices, "|", then the isolated vertex ids.
EdgeGroupPlan parse_plan(std::istream& in, const Matching& indexed_edges);
EdgeGroupPlan load_plan_file(const std::string& path, const Matching& indexed_edges);
void save_plan(std::ostream& out, const EdgeGroupPlan& plan, const Matching& indexed_edges);

}  // namespace kpack::cli
