#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace ratdyn::algebra {

/// Atom and combinator kinds. The declaration order is the canonical sort
/// order used by normalize().
enum class Kind {
  Compacts,            // K
  Circle,              // C(T)
  Cantor,              // C(K)
  Torus2,              // C(T^2)
  Reals0,              // C_0(R)
  BunceDeddens,        // BD(d^inf), carries K-theory
  MappingTorus,        // MT_d
  IrrationalRotation,  // A_theta
  Matrix,              // M_n
  Scalars,             // C
  Opaque,              // simple algebra known only through attributes
  Named,               // unknown total of an extension
  Zero,
  CompactsOn,          // K_x: M_{#RO(x)} if x is exposed, else K
  FinitePower,         // base^k
  Tensor,
  DirectSum,
};

const char* kind_name(Kind k);

struct Expr {
  Kind kind = Kind::Zero;
  long long n = 0;      // Matrix size, BD/MT degree, FinitePower exponent, CompactsOn orbit size (0: not exposed)
  double theta = 0.0;   // IrrationalRotation
  std::string label;    // Opaque/Named label, CompactsOn point symbol
  std::vector<std::string> attributes;
  /// Inventory symbols this node was instantiated from (audit trail).
  std::vector<std::string> origins;
  std::vector<Expr> children;

  bool is_atom() const { return kind != Kind::Tensor && kind != Kind::DirectSum && kind != Kind::FinitePower; }
  bool operator==(const Expr& o) const;
};

Expr compacts();
Expr circle();
Expr cantor();
Expr torus2();
Expr reals0();
Expr bunce_deddens(long long d);
Expr mapping_torus(long long d);
Expr rotation(double theta);
Expr matrix(long long n);
Expr scalars();
Expr opaque(std::string tag, std::vector<std::string> attributes);
Expr named(std::string label);
Expr zero();
/// K_x for the point labelled `symbol`; `exposed_size` = #RO(x) or 0.
Expr compacts_on(std::string symbol, long long exposed_size);
Expr finite_power(Expr base, long long k);
Expr tensor(std::vector<Expr> factors);
Expr direct_sum(std::vector<Expr> summands);
Expr with_origin(Expr e, const std::string& symbol);

/// Canonical form: resolves K_x, expands finite powers, distributes tensor
/// over sums, collapses matrix/compact factors, elides M_1 and C, flattens
/// and sorts. Idempotent.
Expr normalize(const Expr& e);

/// Total order on expressions (kind rank, parameters, children).
int compare(const Expr& a, const Expr& b);

/// ASCII rendering, e.g. "C(T) (x) M_2" or "C(T) (+) (C(T) (x) M_2)".
std::string to_ascii(const Expr& e);

/// K-theory data where the source states it (Bunce-Deddens only).
struct KTheory {
  std::string k0, k1;
};
bool k_theory(const Expr& atom, KTheory& out);

using Json = nlohmann::ordered_json;
Json to_json(const Expr& e);
Expr from_json(const Json& j);

/// 0 -> ideal -> total -> quotient -> 0.
struct ExtensionSeq {
  std::string label;
  Expr ideal;
  Expr total;
  Expr quotient;
  bool degenerate = false;  // ideal or quotient is 0; total equals the other end
  bool blocked = false;
  std::string obstruction;
};
std::string to_ascii(const ExtensionSeq& s);
Json to_json(const ExtensionSeq& s);

/// 3 x 3 grid of algebras with exact rows and columns.
struct SixSquare {
  Expr cell[3][3];
  std::string row_labels[3];
  std::string col_labels[3];
};
Json to_json(const SixSquare& s);
std::string to_ascii(const SixSquare& s);

/// Collects all origin symbols in a tree.
void collect_origins(const Expr& e, std::vector<std::string>& out);

}  // namespace ratdyn::algebra
