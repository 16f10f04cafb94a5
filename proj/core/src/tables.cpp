#include "cubictk/tables.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ctk {

namespace {

// Each shipped table is pinned to the byte-level FNV-1a digest recorded when
// it was generated; any edit to a data file is a hard load error.
struct TableSpec {
  const char* file;
  unsigned long long digest;
};
constexpr TableSpec kAronholdS{"aronhold_s.txt", 0xf550c9796b00ba4cULL};
constexpr TableSpec kAronholdT{"aronhold_t.txt", 0xefcc00e72e98c159ULL};
constexpr TableSpec kChar2{"char2_splitcov.txt", 0xc1d9b0d778992ef2ULL};
constexpr TableSpec kJacB{"jacobian_b72.txt", 0x8470b64300d82fa6ULL};

std::string resolve_dir() {
  std::vector<std::string> candidates;
  if (const char* env = std::getenv("CUBICTK_DATA_DIR")) candidates.push_back(env);
#ifdef CUBICTK_SOURCE_DATA_DIR
  candidates.push_back(CUBICTK_SOURCE_DATA_DIR);
#endif
#ifdef CUBICTK_INSTALL_DATA_DIR
  candidates.push_back(CUBICTK_INSTALL_DATA_DIR);
#endif
  candidates.push_back("data");
  for (const auto& d : candidates)
    if (std::filesystem::exists(std::filesystem::path(d) / kAronholdS.file))
      return d;
  throw TableCorrupt("data tables not found; set CUBICTK_DATA_DIR");
}

std::string slurp_checked(const TableSpec& spec) {
  auto path = std::filesystem::path(table_dir()) / spec.file;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TableCorrupt("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string bytes = ss.str();
  if (fnv1a64(bytes) != spec.digest)
    throw TableCorrupt("checksum mismatch in " + path.string());
  return bytes;
}

InvariantTable load_invariant(const TableSpec& spec) {
  InvariantTable t;
  std::istringstream in(slurp_checked(spec));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::array<int, 10> e{};
    for (auto& x : e) ls >> x;
    std::string coeff;
    ls >> coeff;
    if (!ls) throw TableCorrupt("bad term line in " + std::string(spec.file));
    t.terms.emplace_back(e, Int(coeff));
  }
  if (t.terms.empty()) throw TableCorrupt("empty table " + std::string(spec.file));
  return t;
}

}  // namespace

const std::string& table_dir() {
  static const std::string dir = resolve_dir();
  return dir;
}

const InvariantTable& aronhold_s_table() {
  static const InvariantTable t = load_invariant(kAronholdS);
  return t;
}

const InvariantTable& aronhold_t_table() {
  static const InvariantTable t = load_invariant(kAronholdT);
  return t;
}

const std::vector<std::array<int, 4>>& char2_split_covariant() {
  static const std::vector<std::array<int, 4>> rows = [] {
    std::vector<std::array<int, 4>> out;
    std::istringstream in(slurp_checked(kChar2));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::array<int, 4> r{};
      for (auto& x : r) ls >> x;
      if (!ls) throw TableCorrupt("bad covariant row");
      out.push_back(r);
    }
    if (out.empty()) throw TableCorrupt("empty covariant table");
    return out;
  }();
  return rows;
}

const UniPoly<Int>& jacobian_b_of_t() {
  static const UniPoly<Int> b = [] {
    UniPoly<Int> p((Int(0)));
    p.c.assign(73, Int(0));
    std::istringstream in(slurp_checked(kJacB));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      int e;
      std::string coeff;
      ls >> e >> coeff;
      if (!ls || e < 0 || e > 72) throw TableCorrupt("bad B(t) term");
      p.c[static_cast<size_t>(e)] = Int(coeff);
    }
    p.normalize();
    if (p.degree() != 72) throw TableCorrupt("B(t) degree mismatch");
    return p;
  }();
  return b;
}

}  // namespace ctk
