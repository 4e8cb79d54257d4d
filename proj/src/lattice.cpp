#include "isg/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "isg/error.hpp"

namespace isg {

ProjLattice ProjLattice::over(const ISG& g, std::vector<int> idem_indices) {
  std::sort(idem_indices.begin(), idem_indices.end());
  idem_indices.erase(std::unique(idem_indices.begin(), idem_indices.end()),
                     idem_indices.end());
  for (int i : idem_indices) {
    if (i < 0 || i >= g.size() || !g.is_idempotent(i)) {
      throw Error(ErrorCode::InvalidAlgebra,
                  "semilattice member is not an idempotent");
    }
  }
  for (int i : idem_indices) {
    for (int j : idem_indices) {
      const int m = g.mul(i, j);
      if (!std::binary_search(idem_indices.begin(), idem_indices.end(), m)) {
        throw Error(ErrorCode::NotASubsemigroup,
                    "idempotent set is not closed under meets: " +
                        g.elem(i).str() + " * " + g.elem(j).str() + " = " +
                        g.elem(m).str() + " is missing");
      }
    }
  }
  ProjLattice l;
  l.ambient = &g;
  l.members = std::move(idem_indices);
  l.position.assign(g.size(), -1);
  for (int x = 0; x < l.size(); ++x) l.position[l.members[x]] = x;
  return l;
}

ProjLattice ProjLattice::full(const ISG& g) {
  return over(g, g.idempotents());
}

int ProjLattice::meet(int x, int y) const {
  return position[ambient->mul(members[x], members[y])];
}

bool ProjLattice::leq(int x, int y) const {
  return ambient->leq(members[x], members[y]);
}

int ProjLattice::position_of_ambient(int ambient_index) const {
  if (ambient_index < 0 || ambient_index >= ambient->size()) return -1;
  return position[ambient_index];
}

std::string ProjLattice::label(int x) const {
  return ambient->elem(members[x]).str();
}

TProj TProj::zero(const ProjLattice& host) {
  TProj p;
  p.host = &host;
  p.mask.assign(host.size(), 0);
  return p;
}

TProj TProj::one(const ProjLattice& host) {
  TProj p;
  p.host = &host;
  p.mask.assign(host.size(), 1);
  return p;
}

bool TProj::is_zero() const {
  return std::all_of(mask.begin(), mask.end(), [](char c) { return !c; });
}

bool TProj::is_one() const {
  return std::all_of(mask.begin(), mask.end(), [](char c) { return c != 0; });
}

int TProj::count() const {
  return static_cast<int>(std::count(mask.begin(), mask.end(), char(1)));
}

std::vector<int> TProj::atom_list() const {
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(mask.size()); ++a) {
    if (mask[a]) out.push_back(a);
  }
  return out;
}

namespace {

void require_same_host(const TProj& a, const TProj& b) {
  if (a.host != b.host) {
    throw Error(ErrorCode::InvalidAlgebra,
                "projections live over different semilattices");
  }
}

}  // namespace

TProj TProj::meet(const TProj& other) const {
  require_same_host(*this, other);
  TProj out = *this;
  for (std::size_t i = 0; i < mask.size(); ++i) out.mask[i] &= other.mask[i];
  return out;
}

TProj TProj::join(const TProj& other) const {
  require_same_host(*this, other);
  TProj out = *this;
  for (std::size_t i = 0; i < mask.size(); ++i) out.mask[i] |= other.mask[i];
  return out;
}

TProj TProj::complement() const {
  TProj out = *this;
  for (auto& c : out.mask) c = c ? 0 : 1;
  return out;
}

bool TProj::leq(const TProj& other) const {
  require_same_host(*this, other);
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] && !other.mask[i]) return false;
  }
  return true;
}

bool TProj::operator==(const TProj& other) const {
  return host == other.host && mask == other.mask;
}

std::string TProj::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int a : atom_list()) {
    if (!first) os << ",";
    first = false;
    os << host->label(a);
  }
  os << "}";
  return os.str();
}

AtomWord canonical_atom_word(const ProjLattice& host, int a) {
  AtomWord w;
  w.e0 = a;
  for (int f = 0; f < host.size(); ++f) {
    if (!host.leq(a, f)) w.negatives.push_back(f);
  }
  return w;
}

TProj word_to_atoms(const ProjLattice& host, int e0,
                    const std::vector<int>& negatives) {
  TProj p = TProj::zero(host);
  for (int a = 0; a < host.size(); ++a) {
    if (!host.leq(a, e0)) continue;
    bool killed = false;
    for (int f : negatives) {
      if (host.leq(a, f)) {
        killed = true;
        break;
      }
    }
    if (!killed) p.mask[a] = 1;
  }
  return p;
}

TProj atom_of(const ProjLattice& host, int e) {
  TProj p = TProj::zero(host);
  p.mask[e] = 1;
  return p;
}

std::vector<TProj> all_atoms(const ProjLattice& host) {
  std::vector<TProj> out;
  out.reserve(host.size());
  for (int e = 0; e < host.size(); ++e) out.push_back(atom_of(host, e));
  return out;
}

int sigma(const TProj& p) {
  if (p.is_zero()) {
    throw Error(ErrorCode::ZeroProjection,
                "the zero projection has no leading coefficient");
  }
  const ProjLattice& host = *p.host;
  const auto atoms = p.atom_list();
  std::vector<int> upper;
  for (int f = 0; f < host.size(); ++f) {
    bool dominates = true;
    for (int a : atoms) {
      if (!host.leq(a, f)) {
        dominates = false;
        break;
      }
    }
    if (dominates) upper.push_back(f);
  }
  if (upper.empty()) {
    throw Error(ErrorCode::NoLeadingCoefficient,
                "no semilattice member dominates " + p.str());
  }
  int m = upper.front();
  for (int f : upper) m = host.meet(m, f);
  for (int a : atoms) {
    if (!host.leq(a, m)) {
      throw Error(ErrorCode::NoLeadingCoefficient,
                  "upper bounds of " + p.str() + " have no minimum");
    }
  }
  return m;
}

TProj conjugate_projection(int g_ambient, const TProj& p) {
  const ProjLattice& host = *p.host;
  const ISG& g = *host.ambient;
  const int gi = g.inv(g_ambient);
  auto conj = [&](int local) {
    const int c = g.mul(g.mul(g_ambient, host.members[local]), gi);
    const int lc = host.position[c];
    if (lc < 0) {
      throw Error(ErrorCode::InvalidAlgebra,
                  "conjugation by " + g.elem(g_ambient).str() +
                      " leaves the semilattice at " + host.label(local));
    }
    return lc;
  };
  TProj out = TProj::zero(host);
  for (int a : p.atom_list()) {
    AtomWord w = canonical_atom_word(host, a);
    std::vector<int> negs;
    negs.reserve(w.negatives.size());
    for (int f : w.negatives) negs.push_back(conj(f));
    out = out.join(word_to_atoms(host, conj(w.e0), negs));
  }
  return out;
}

std::vector<QC> expand_in_span(const TProj& p) {
  const ProjLattice& host = *p.host;
  const int n = host.size();
  // Coefficients solve sum_{e >= a} c_e = [a in p] for every member a.
  // Canonical element order is a linear extension of the reversed natural
  // order, so the system is triangular when members are scanned in storage
  // order.
  std::vector<QC> c(n, QC(0));
  for (int a = 0; a < n; ++a) {
    QC acc(p.has_atom(a) ? 1 : 0);
    for (int e = 0; e < a; ++e) {
      if (host.leq(a, e)) acc -= c[e];
    }
    c[a] = acc;
  }
  return c;
}

}  // namespace isg
