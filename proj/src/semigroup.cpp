#include "isg/semigroup.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "isg/error.hpp"

namespace isg {

InverseSemigroup InverseSemigroup::close(int degree,
                                         const std::vector<PartialPerm>& gens,
                                         int size_cap) {
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch,
                  "generator degree " + std::to_string(g.degree()) +
                      " does not match semigroup degree " +
                      std::to_string(degree));
    }
  }

  std::set<PartialPerm> seen;
  std::vector<PartialPerm> items;
  auto enqueue = [&](const PartialPerm& p) {
    if (seen.insert(p).second) {
      items.push_back(p);
      if (static_cast<int>(items.size()) > size_cap) {
        throw Error(ErrorCode::ClosureTooLarge,
                    "closure exceeded the size cap of " +
                        std::to_string(size_cap) + " elements");
      }
    }
  };

  for (const auto& g : gens) {
    enqueue(g);
    enqueue(g.inverse());
  }
  // Every pair is covered once the later of its two elements takes its turn.
  for (std::size_t i = 0; i < items.size(); ++i) {
    const PartialPerm p = items[i];
    enqueue(p.inverse());
    for (std::size_t j = 0; j < items.size(); ++j) {
      const PartialPerm q = items[j];
      enqueue(p.compose(q));
      enqueue(q.compose(p));
    }
  }

  InverseSemigroup s;
  s.degree_ = degree;
  s.elems_.assign(seen.begin(), seen.end());
  s.build_tables();
  return s;
}

void InverseSemigroup::build_tables() {
  const int n = size();
  std::map<PartialPerm, int> index;
  for (int i = 0; i < n; ++i) index.emplace(elems_[i], i);

  mult_.assign(n, std::vector<int>(n, -1));
  inv_.assign(n, -1);
  idem_mask_.assign(n, 0);
  idem_.clear();

  for (int i = 0; i < n; ++i) {
    auto it = index.find(elems_[i].inverse());
    if (it == index.end()) {
      throw Error(ErrorCode::NotASubsemigroup,
                  "element set is not closed under inversion");
    }
    inv_[i] = it->second;
    if (elems_[i].is_idempotent()) {
      idem_mask_[i] = 1;
      idem_.push_back(i);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto it = index.find(elems_[i].compose(elems_[j]));
      if (it == index.end()) {
        throw Error(ErrorCode::NotASubsemigroup,
                    "element set is not closed under composition");
      }
      mult_[i][j] = it->second;
    }
  }

  leq_.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    const int dom = mult_[inv_[i]][i];
    for (int j = 0; j < n; ++j) {
      leq_[i][j] = (mult_[j][dom] == i) ? 1 : 0;
    }
  }

  zero_.reset();
  for (int z = 0; z < n; ++z) {
    bool absorbing = true;
    for (int x = 0; x < n && absorbing; ++x) {
      absorbing = (mult_[z][x] == z) && (mult_[x][z] == z);
    }
    if (absorbing) {
      zero_ = z;
      break;
    }
  }
}

int InverseSemigroup::index_of(const PartialPerm& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  if (it == elems_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elems_.begin());
}

bool InverseSemigroup::table_associative(int* bad_i, int* bad_j,
                                         int* bad_k) const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int ij = mult_[i][j];
      for (int k = 0; k < n; ++k) {
        if (mult_[ij][k] != mult_[i][mult_[j][k]]) {
          if (bad_i) *bad_i = i;
          if (bad_j) *bad_j = j;
          if (bad_k) *bad_k = k;
          return false;
        }
      }
    }
  }
  return true;
}

SubsetCheck subsemigroup_check(const ISG& g, const std::vector<int>& subset) {
  std::vector<char> in(g.size(), 0);
  for (int i : subset) in[i] = 1;
  SubsetCheck r;
  for (int i : subset) {
    if (!in[g.inv(i)]) {
      r.closed_inv = false;
      r.witness_i = i;
      return r;
    }
  }
  for (int i : subset) {
    for (int j : subset) {
      if (!in[g.mul(i, j)]) {
        r.closed_mul = false;
        r.witness_i = i;
        r.witness_j = j;
        return r;
      }
    }
  }
  return r;
}

SubISG SubISG::whole(const ISG& g) {
  std::vector<int> all(g.size());
  for (int i = 0; i < g.size(); ++i) all[i] = i;
  return from_indices(g, std::move(all));
}

SubISG SubISG::from_indices(const ISG& g, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  SubsetCheck chk = subsemigroup_check(g, subset);
  if (!chk.ok()) {
    std::ostringstream os;
    if (!chk.closed_inv) {
      os << "subset is not closed under inversion: the inverse of "
         << g.elem(chk.witness_i).str() << " is missing";
    } else {
      os << "subset is not closed under composition: "
         << g.elem(chk.witness_i).str() << " * " << g.elem(chk.witness_j).str()
         << " = " << g.elem(g.mul(chk.witness_i, chk.witness_j)).str()
         << " is missing";
    }
    throw Error(ErrorCode::NotASubsemigroup, os.str());
  }

  SubISG sub;
  sub.parent = &g;
  std::vector<PartialPerm> members;
  members.reserve(subset.size());
  for (int i : subset) members.push_back(g.elem(i));
  sub.local = ISG::close(g.degree(), members,
                         static_cast<int>(subset.size()) + 1);
  sub.to_parent.resize(sub.local.size());
  sub.from_parent.assign(g.size(), -1);
  for (int i = 0; i < sub.local.size(); ++i) {
    const int p = g.index_of(sub.local.elem(i));
    sub.to_parent[i] = p;
    sub.from_parent[p] = i;
  }
  return sub;
}

SubISG SubISG::closure_of(const ISG& g, const std::vector<int>& seed) {
  std::vector<char> in(g.size(), 0);
  std::vector<int> items;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      items.push_back(x);
    }
  };
  for (int s : seed) push(s);
  for (size_t i = 0; i < items.size(); ++i) {
    const int p = items[i];
    push(g.inv(p));
    for (size_t j = 0; j <= i && j < items.size(); ++j) {
      push(g.mul(p, items[j]));
      push(g.mul(items[j], p));
    }
  }
  return from_indices(g, std::move(items));
}

MinimalGroup minimal_idempotent_group(const ISG& g) {
  MinimalGroup out;
  const auto& idem = g.idempotents();
  if (idem.empty()) {
    out.failure = "no idempotents";
    return out;
  }
  int e0 = idem.front();
  for (int e : idem) e0 = g.mul(e0, e);
  out.e0 = e0;

  std::vector<char> mark(g.size(), 0);
  for (int x = 0; x < g.size(); ++x) {
    const int y = g.mul(g.mul(e0, x), e0);
    if (!mark[y]) {
      mark[y] = 1;
      out.members.push_back(y);
    }
  }
  std::sort(out.members.begin(), out.members.end());

  for (int x : out.members) {
    if (g.mul(e0, x) != x || g.mul(x, e0) != x) {
      out.failure = "identity law fails at " + g.elem(x).str();
      return out;
    }
    const int xi = g.inv(x);
    if (!mark[xi]) {
      out.failure = "inverse of " + g.elem(x).str() + " escapes the set";
      return out;
    }
    if (g.mul(x, xi) != e0 || g.mul(xi, x) != e0) {
      out.failure = "inverse law fails at " + g.elem(x).str();
      return out;
    }
  }
  for (int x : out.members) {
    for (int y : out.members) {
      if (!mark[g.mul(x, y)]) {
        out.failure = "product escapes the set";
        return out;
      }
    }
  }
  out.is_group = true;
  return out;
}

SemigroupInput parse_semigroup_text(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    // Map the byte offset to a line and column so the message points at the
    // offending spot in the input document.
    std::size_t line = 1, col = 1;
    const std::size_t stop =
        e.byte > 0 ? std::min(json_text.size(), e.byte - 1) : 0;
    for (std::size_t i = 0; i < stop; ++i) {
      if (json_text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream msg;
    msg << "bad JSON at line " << line << ", position " << col << ": "
        << e.what();
    throw Error(ErrorCode::ParseError, msg.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("degree") ||
      !doc.contains("generators")) {
    throw Error(ErrorCode::ParseError,
                "expected an object with \"degree\" and \"generators\"");
  }
  SemigroupInput in;
  if (!doc["degree"].is_number_integer()) {
    throw Error(ErrorCode::ParseError, "\"degree\" must be an integer");
  }
  in.degree = doc["degree"].get<int>();
  if (in.degree < 0) {
    throw Error(ErrorCode::ParseError, "\"degree\" must be nonnegative");
  }
  if (!doc["generators"].is_array()) {
    throw Error(ErrorCode::ParseError, "\"generators\" must be an array");
  }
  for (const auto& row : doc["generators"]) {
    if (!row.is_array()) {
      throw Error(ErrorCode::ParseError, "each generator must be an array");
    }
    std::vector<int> img;
    img.reserve(row.size());
    for (const auto& cell : row) {
      if (cell.is_null()) {
        img.push_back(0);
      } else if (cell.is_number_integer()) {
        img.push_back(cell.get<int>());
      } else {
        throw Error(ErrorCode::ParseError,
                    "generator entries must be integers or null");
      }
    }
    try {
      in.generators.emplace_back(in.degree, img);
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError,
                  std::string("bad generator: ") + e.what());
    }
  }
  return in;
}

SemigroupInput load_semigroup_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    throw Error(ErrorCode::ParseError, "cannot open " + path);
  }
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_semigroup_text(buf.str());
}

std::string semigroup_input_to_text(const SemigroupInput& in) {
  nlohmann::json doc;
  doc["degree"] = in.degree;
  auto gens = nlohmann::json::array();
  for (const auto& g : in.generators) {
    auto row = nlohmann::json::array();
    for (int p = 1; p <= in.degree; ++p) {
      const int q = g.image(p);
      if (q == 0) {
        row.push_back(nullptr);
      } else {
        row.push_back(q);
      }
    }
    gens.push_back(std::move(row));
  }
  doc["generators"] = std::move(gens);
  return doc.dump();
}

std::string generator_hash(const SemigroupInput& in) {
  // FNV-1a, 64 bit.
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xffULL;
      h *= 1099511628211ULL;
    }
  };
  feed(static_cast<std::uint64_t>(in.degree));
  feed(static_cast<std::uint64_t>(in.generators.size()));
  for (const auto& g : in.generators) {
    for (int p = 1; p <= in.degree; ++p) {
      feed(static_cast<std::uint64_t>(g.image(p)));
    }
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

void save_table_cache(const ISG& g, const SemigroupInput& in,
                      const std::string& path) {
  nlohmann::json doc;
  doc["hash"] = generator_hash(in);
  doc["degree"] = g.degree();
  auto elems = nlohmann::json::array();
  for (int i = 0; i < g.size(); ++i) {
    auto row = nlohmann::json::array();
    for (int p = 1; p <= g.degree(); ++p) {
      const int q = g.elem(i).image(p);
      if (q == 0) {
        row.push_back(nullptr);
      } else {
        row.push_back(q);
      }
    }
    elems.push_back(std::move(row));
  }
  doc["elements"] = std::move(elems);
  std::ofstream f(path);
  if (!f) {
    throw Error(ErrorCode::ParseError, "cannot write " + path);
  }
  f << doc.dump() << "\n";
}

std::optional<ISG> load_table_cache(const SemigroupInput& in,
                                    const std::string& path) {
  std::ifstream f(path);
  if (!f) return std::nullopt;
  nlohmann::json doc;
  try {
    f >> doc;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
  if (!doc.is_object() || !doc.contains("hash") ||
      doc["hash"] != generator_hash(in)) {
    return std::nullopt;
  }
  if (!doc.contains("elements") || !doc["elements"].is_array()) {
    return std::nullopt;
  }
  std::vector<PartialPerm> elems;
  try {
    for (const auto& row : doc["elements"]) {
      std::vector<int> img;
      for (const auto& cell : row) {
        img.push_back(cell.is_null() ? 0 : cell.get<int>());
      }
      elems.emplace_back(in.degree, img);
    }
  } catch (...) {
    return std::nullopt;
  }
  // Rebuilding from the stored element list skips the closure search but
  // still validates the tables.
  try {
    return ISG::close(in.degree, elems, static_cast<int>(elems.size()) + 1);
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace isg
