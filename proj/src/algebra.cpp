#include "ratdyn/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ratdyn::algebra {

namespace {

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Expr atom(Kind k, long long n = 0) {
  Expr e;
  e.kind = k;
  e.n = n;
  return e;
}

void merge_origins(std::vector<std::string>& into, const std::vector<std::string>& from) {
  into.insert(into.end(), from.begin(), from.end());
  std::sort(into.begin(), into.end());
  into.erase(std::unique(into.begin(), into.end()), into.end());
}

template <class T>
int cmp(const T& a, const T& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

void sort_children(std::vector<Expr>& v) {
  std::stable_sort(v.begin(), v.end(), [](const Expr& a, const Expr& b) { return compare(a, b) < 0; });
}

bool composite(const Expr& e) { return e.kind == Kind::Tensor || e.kind == Kind::DirectSum; }

const std::vector<std::pair<Kind, const char*>>& kind_names() {
  static const std::vector<std::pair<Kind, const char*>> names = {
      {Kind::Compacts, "compacts"},
      {Kind::Circle, "circle"},
      {Kind::Cantor, "cantor"},
      {Kind::Torus2, "torus2"},
      {Kind::Reals0, "reals0"},
      {Kind::BunceDeddens, "bunce_deddens"},
      {Kind::MappingTorus, "mapping_torus"},
      {Kind::IrrationalRotation, "irrational_rotation"},
      {Kind::Matrix, "matrix"},
      {Kind::Scalars, "scalars"},
      {Kind::Opaque, "opaque_simple"},
      {Kind::Named, "named_unknown"},
      {Kind::Zero, "zero"},
      {Kind::CompactsOn, "compacts_on"},
      {Kind::FinitePower, "finite_power"},
      {Kind::Tensor, "tensor"},
      {Kind::DirectSum, "direct_sum"},
  };
  return names;
}

Expr normalize_tensor(const Expr& e);
Expr normalize_sum(const Expr& e);

Expr normalize_sum(const Expr& e) {
  std::vector<Expr> kids;
  for (const auto& c : e.children) {
    Expr n = normalize(c);
    if (n.kind == Kind::Zero) continue;
    if (n.kind == Kind::DirectSum) {
      for (auto& g : n.children) kids.push_back(std::move(g));
    } else {
      kids.push_back(std::move(n));
    }
  }
  if (kids.empty()) return zero();
  if (kids.size() == 1) return kids.front();
  sort_children(kids);
  Expr out = atom(Kind::DirectSum);
  out.children = std::move(kids);
  return out;
}

Expr normalize_tensor(const Expr& e) {
  std::vector<Expr> kids;
  for (const auto& c : e.children) {
    Expr n = normalize(c);
    if (n.kind == Kind::Tensor) {
      for (auto& g : n.children) kids.push_back(std::move(g));
    } else {
      kids.push_back(std::move(n));
    }
  }
  for (const auto& k : kids)
    if (k.kind == Kind::Zero) return zero();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (kids[i].kind != Kind::DirectSum) continue;
    std::vector<Expr> terms;
    for (const auto& s : kids[i].children) {
      std::vector<Expr> f = kids;
      f[i] = s;
      terms.push_back(tensor(std::move(f)));
    }
    return normalize(direct_sum(std::move(terms)));
  }
  long long msize = 1;
  std::vector<std::string> morig, korig;
  bool has_compacts = false;
  std::vector<Expr> rest;
  for (auto& k : kids) {
    switch (k.kind) {
      case Kind::Matrix:
        msize *= k.n;
        merge_origins(morig, k.origins);
        break;
      case Kind::Compacts:
        has_compacts = true;
        merge_origins(korig, k.origins);
        break;
      case Kind::Scalars: break;
      default: rest.push_back(std::move(k));
    }
  }
  if (has_compacts) {
    Expr kk = compacts();
    kk.origins = korig;
    merge_origins(kk.origins, morig);
    rest.push_back(std::move(kk));
  } else if (msize > 1) {
    Expr m = matrix(msize);
    m.origins = morig;
    rest.push_back(std::move(m));
  }
  if (rest.empty()) return scalars();
  if (rest.size() == 1) return rest.front();
  sort_children(rest);
  Expr out = atom(Kind::Tensor);
  out.children = std::move(rest);
  return out;
}

std::string atom_ascii(const Expr& e) {
  switch (e.kind) {
    case Kind::Compacts: return "K";
    case Kind::Circle: return "C(T)";
    case Kind::Cantor: return "C(K)";
    case Kind::Torus2: return "C(T^2)";
    case Kind::Reals0: return "C_0(R)";
    case Kind::BunceDeddens: return "BD(" + std::to_string(e.n) + "^inf)";
    case Kind::MappingTorus: return "MT_" + std::to_string(e.n);
    case Kind::IrrationalRotation: return "A_theta[" + shortest(e.theta) + "]";
    case Kind::Matrix: return "M_" + std::to_string(e.n);
    case Kind::Scalars: return "C";
    case Kind::Opaque:
    case Kind::Named: return e.label;
    case Kind::Zero: return "0";
    case Kind::CompactsOn: return "K_" + e.label;
    default: return "?";
  }
}

}  // namespace

const char* kind_name(Kind k) {
  for (const auto& [kind, name] : kind_names())
    if (kind == k) return name;
  return "?";
}

bool Expr::operator==(const Expr& o) const { return compare(*this, o) == 0; }

Expr compacts() { return atom(Kind::Compacts); }
Expr circle() { return atom(Kind::Circle); }
Expr cantor() { return atom(Kind::Cantor); }
Expr torus2() { return atom(Kind::Torus2); }
Expr reals0() { return atom(Kind::Reals0); }
Expr bunce_deddens(long long d) { return atom(Kind::BunceDeddens, d); }
Expr mapping_torus(long long d) { return atom(Kind::MappingTorus, d); }
Expr rotation(double theta) {
  Expr e = atom(Kind::IrrationalRotation);
  e.theta = theta;
  return e;
}
Expr matrix(long long n) { return atom(Kind::Matrix, n); }
Expr scalars() { return atom(Kind::Scalars); }
Expr opaque(std::string tag, std::vector<std::string> attributes) {
  Expr e = atom(Kind::Opaque);
  e.label = std::move(tag);
  e.attributes = std::move(attributes);
  return e;
}
Expr named(std::string label) {
  Expr e = atom(Kind::Named);
  e.label = std::move(label);
  return e;
}
Expr zero() { return atom(Kind::Zero); }
Expr compacts_on(std::string symbol, long long exposed_size) {
  Expr e = atom(Kind::CompactsOn, exposed_size);
  e.label = std::move(symbol);
  return e;
}
Expr finite_power(Expr base, long long k) {
  Expr e = atom(Kind::FinitePower, k);
  e.children.push_back(std::move(base));
  return e;
}
Expr tensor(std::vector<Expr> factors) {
  Expr e = atom(Kind::Tensor);
  e.children = std::move(factors);
  return e;
}
Expr direct_sum(std::vector<Expr> summands) {
  Expr e = atom(Kind::DirectSum);
  e.children = std::move(summands);
  return e;
}
Expr with_origin(Expr e, const std::string& symbol) {
  merge_origins(e.origins, {symbol});
  return e;
}

Expr normalize(const Expr& e) {
  switch (e.kind) {
    case Kind::CompactsOn: {
      Expr r = e.n > 0 ? matrix(e.n) : compacts();
      r.origins = e.origins;
      merge_origins(r.origins, {e.label});
      return r.kind == Kind::Matrix && r.n == 1 ? scalars() : r;
    }
    case Kind::Matrix:
      if (e.n == 1) return scalars();
      return e;
    case Kind::FinitePower: {
      if (e.n <= 0) return zero();
      Expr base = normalize(e.children.at(0));
      merge_origins(base.origins, e.origins);
      if (e.n == 1) return base;
      std::vector<Expr> copies(static_cast<std::size_t>(e.n), base);
      return normalize_sum(direct_sum(std::move(copies)));
    }
    case Kind::Tensor: return e.children.empty() ? scalars() : normalize_tensor(e);
    case Kind::DirectSum: return normalize_sum(e);
    default: return e;
  }
}

int compare(const Expr& a, const Expr& b) {
  if (int c = cmp(static_cast<int>(a.kind), static_cast<int>(b.kind))) return c;
  if (int c = cmp(a.n, b.n)) return c;
  if (int c = cmp(a.theta, b.theta)) return c;
  if (int c = cmp(a.label, b.label)) return c;
  if (int c = cmp(a.attributes, b.attributes)) return c;
  if (int c = cmp(a.children.size(), b.children.size())) return c;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (int c = compare(a.children[i], b.children[i])) return c;
  return cmp(a.origins, b.origins);
}

std::string to_ascii(const Expr& e) {
  switch (e.kind) {
    case Kind::FinitePower: {
      const Expr& b = e.children.at(0);
      const std::string base = b.is_atom() ? to_ascii(b) : "(" + to_ascii(b) + ")";
      return base + "^" + std::to_string(e.n);
    }
    case Kind::Tensor:
    case Kind::DirectSum: {
      const char* sep = e.kind == Kind::Tensor ? " (x) " : " (+) ";
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += sep;
        const Expr& c = e.children[i];
        out += composite(c) ? "(" + to_ascii(c) + ")" : to_ascii(c);
      }
      return out;
    }
    default: return atom_ascii(e);
  }
}

bool k_theory(const Expr& e, KTheory& out) {
  if (e.kind != Kind::BunceDeddens) return false;
  out.k0 = "Z[1/" + std::to_string(e.n) + "]";
  out.k1 = "Z";
  return true;
}

Json to_json(const Expr& e) {
  Json j;
  j["kind"] = kind_name(e.kind);
  switch (e.kind) {
    case Kind::Matrix:
    case Kind::BunceDeddens:
    case Kind::MappingTorus:
    case Kind::FinitePower:
    case Kind::CompactsOn: j["n"] = e.n; break;
    default: break;
  }
  if (e.kind == Kind::IrrationalRotation) j["theta"] = e.theta;
  if (!e.label.empty()) j["label"] = e.label;
  if (!e.attributes.empty()) j["attributes"] = e.attributes;
  KTheory kt;
  if (k_theory(e, kt)) j["k_theory"] = {{"K0", kt.k0}, {"K1", kt.k1}};
  if (!e.origins.empty()) j["origins"] = e.origins;
  if (!e.children.empty()) {
    Json kids = Json::array();
    for (const auto& c : e.children) kids.push_back(to_json(c));
    j["children"] = kids;
  }
  return j;
}

Expr from_json(const Json& j) {
  Expr e;
  const std::string name = j.at("kind").get<std::string>();
  bool known = false;
  for (const auto& [kind, n] : kind_names())
    if (name == n) {
      e.kind = kind;
      known = true;
    }
  if (!known) throw std::invalid_argument("unknown algebra kind '" + name + "'");
  if (j.contains("n")) e.n = j["n"].get<long long>();
  if (j.contains("theta")) e.theta = j["theta"].get<double>();
  if (j.contains("label")) e.label = j["label"].get<std::string>();
  if (j.contains("attributes")) e.attributes = j["attributes"].get<std::vector<std::string>>();
  if (j.contains("origins")) e.origins = j["origins"].get<std::vector<std::string>>();
  if (j.contains("children"))
    for (const auto& c : j["children"]) e.children.push_back(from_json(c));
  return e;
}

std::string to_ascii(const ExtensionSeq& s) {
  std::string head = s.label.empty() ? "" : s.label + ": ";
  if (s.blocked) return head + "blocked (" + s.obstruction + ")";
  if (s.degenerate && s.ideal.kind == Kind::Zero)
    return head + to_ascii(s.quotient) + " (ideal is 0; total equals the quotient)";
  if (s.degenerate) return head + to_ascii(s.ideal) + " (quotient is 0; total equals the ideal)";
  return head + "0 -> " + to_ascii(s.ideal) + " -> ? -> " + to_ascii(s.quotient) + " -> 0   [? = " +
         to_ascii(s.total) + "]";
}

Json to_json(const ExtensionSeq& s) {
  Json j;
  j["label"] = s.label;
  j["ideal"] = to_json(s.ideal);
  j["ideal_text"] = to_ascii(s.ideal);
  j["total"] = to_json(s.total);
  j["total_text"] = to_ascii(s.total);
  j["quotient"] = to_json(s.quotient);
  j["quotient_text"] = to_ascii(s.quotient);
  j["degenerate"] = s.degenerate;
  j["blocked"] = s.blocked;
  if (s.blocked) j["obstruction"] = s.obstruction;
  return j;
}

Json to_json(const SixSquare& s) {
  Json j;
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 3; ++c) row.push_back({{"text", to_ascii(s.cell[r][c])}, {"expr", to_json(s.cell[r][c])}});
    rows.push_back(row);
  }
  j["cells"] = rows;
  j["row_labels"] = {s.row_labels[0], s.row_labels[1], s.row_labels[2]};
  j["col_labels"] = {s.col_labels[0], s.col_labels[1], s.col_labels[2]};
  return j;
}

std::string to_ascii(const SixSquare& s) {
  std::size_t width[3] = {0, 0, 0};
  std::string text[3][3];
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      text[r][c] = to_ascii(s.cell[r][c]);
      width[c] = std::max(width[c], text[r][c].size());
    }
  std::ostringstream os;
  for (int r = 0; r < 3; ++r) {
    os << "0 -> ";
    for (int c = 0; c < 3; ++c) {
      os << text[r][c] << std::string(width[c] - text[r][c].size(), ' ');
      os << (c < 2 ? " -> " : " -> 0");
    }
    os << "   (" << s.row_labels[r] << ")\n";
  }
  os << "columns: " << s.col_labels[0] << " | " << s.col_labels[1] << " | " << s.col_labels[2] << "\n";
  return os.str();
}

void collect_origins(const Expr& e, std::vector<std::string>& out) {
  out.insert(out.end(), e.origins.begin(), e.origins.end());
  if (e.kind == Kind::CompactsOn) out.push_back(e.label);
  for (const auto& c : e.children) collect_origins(c, out);
}

}  // namespace ratdyn::algebra
