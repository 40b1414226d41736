#include "envelope/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "envelope/error.hpp"
#include "json.hpp"

namespace envelope {

bool BettiReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void BettiReport::check(const std::string& name, bool passed, const std::string& detail) {
  checks.push_back({name, passed, detail});
}

std::vector<std::size_t> BettiReport::betti() const {
  std::map<int, std::size_t> by_weight;
  for (const auto& e : entries) by_weight[e.weight] += e.homology;
  std::vector<std::size_t> out;
  for (const auto& [w, h] : by_weight) out.push_back(h);
  return out;
}

std::string BettiReport::to_json() const {
  nlohmann::ordered_json j;
  j["theory"] = theory;
  j["direction"] = direction;
  j["input"] = input;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json r;
    r["weight"] = e.weight;
    if (e.internal_degree) r["internal_degree"] = *e.internal_degree;
    r["chain_dim"] = e.chain_dim;
    r["rank_in"] = e.rank_in;
    r["rank_out"] = e.rank_out;
    r["homology"] = e.homology;
    r["asserted"] = e.asserted;
    if (!e.note.empty()) r["note"] = e.note;
    rows.push_back(std::move(r));
  }
  j["entries"] = std::move(rows);
  auto cs = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json r;
    r["name"] = c.name;
    r["passed"] = c.passed;
    if (!c.detail.empty()) r["detail"] = c.detail;
    cs.push_back(std::move(r));
  }
  j["checks"] = std::move(cs);
  j["all_passed"] = all_passed();
  return j.dump(2) + "\n";
}

std::string BettiReport::to_table() const {
  std::ostringstream os;
  os << theory << " " << direction;
  if (!input.empty()) os << "  (" << input << ")";
  os << "\n";
  const bool graded = std::any_of(entries.begin(), entries.end(), [](const BettiEntry& e) { return e.internal_degree.has_value(); });
  if (!entries.empty()) {
    os << std::setw(7) << "weight";
    if (graded) os << std::setw(8) << "degree";
    os << std::setw(8) << "dim" << std::setw(9) << "rank_in" << std::setw(10) << "rank_out" << std::setw(7) << "H"
       << "\n";
  }
  for (const auto& e : entries) {
    os << std::setw(7) << e.weight;
    if (graded) {
      if (e.internal_degree)
        os << std::setw(8) << *e.internal_degree;
      else
        os << std::setw(8) << "-";
    }
    os << std::setw(8) << e.chain_dim << std::setw(9) << e.rank_in << std::setw(10) << e.rank_out << std::setw(7)
       << e.homology;
    if (!e.asserted) os << "  truncated, not asserted";
    if (!e.note.empty()) os << "  " << e.note;
    os << "\n";
  }
  for (const auto& c : checks) {
    os << (c.passed ? "  ok    " : "  FAIL  ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  return os.str();
}

std::vector<BettiEntry> betti_entries(int weight, const SparseMap& d_out, const SparseMap& d_in,
                                      const std::vector<int>& tags) {
  if (d_out.cols() != d_in.rows())
    throw Error(ErrorCode::DimensionMismatch, "weight " + std::to_string(weight) + ": maps do not compose");
  if (!(d_out * d_in).is_zero())
    throw Error(ErrorCode::CompositeNotZero, "weight " + std::to_string(weight) + ": d o d != 0");
  const std::size_t dim = d_out.cols();
  if (tags.empty()) {
    BettiEntry e;
    e.weight = weight;
    e.chain_dim = dim;
    e.rank_out = rank(d_out);
    e.rank_in = rank(d_in);
    e.homology = dim - e.rank_out - e.rank_in;
    return {e};
  }
  if (tags.size() != dim) throw Error(ErrorCode::DimensionMismatch, "degree tags do not match the chain space");
  std::vector<BettiEntry> out;
  std::vector<std::size_t> all_in_cols(d_in.cols());
  for (std::size_t c = 0; c < all_in_cols.size(); ++c) all_in_cols[c] = c;
  std::vector<std::size_t> all_out_rows(d_out.rows());
  for (std::size_t r = 0; r < all_out_rows.size(); ++r) all_out_rows[r] = r;
  for (int t : std::set<int>(tags.begin(), tags.end())) {
    std::vector<std::size_t> piece;
    for (std::size_t i = 0; i < dim; ++i)
      if (tags[i] == t) piece.push_back(i);
    BettiEntry e;
    e.weight = weight;
    e.internal_degree = t;
    e.chain_dim = piece.size();
    e.rank_out = rank(d_out.submatrix(all_out_rows, piece));
    e.rank_in = rank(d_in.submatrix(piece, all_in_cols));
    e.homology = e.chain_dim - e.rank_out - e.rank_in;
    out.push_back(e);
  }
  return out;
}

}  // namespace envelope
