#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "canon/enumerate.hpp"

namespace canon {

/// On-disk form of a finite, explicitly listed proof system.
struct AbstractProofDecl {
  std::string id;
  std::vector<std::string> premises;
  std::string conclusion;
  std::vector<std::string> subproofs;  // may omit the proof itself

  bool operator==(const AbstractProofDecl&) const = default;
};

struct AbstractSystemDoc {
  std::vector<std::string> atoms;
  std::vector<AbstractProofDecl> proofs;
  std::vector<std::pair<std::string, std::string>> ordering;  // greater, lesser
  std::vector<std::string> presentation;  // optional default starting set

  bool operator==(const AbstractSystemDoc&) const = default;
};

AbstractSystemDoc parse_abstract_doc(const std::string& json_text);
std::string dump_abstract_doc(const AbstractSystemDoc& doc);

/// A loaded abstract proof system. All framework computations over it are
/// exact: the proof space is the declared finite table, the subproof
/// relation is the declared one closed reflexively-transitively, and the
/// proof ordering is the declared pair set closed transitively.
class AbstractSystem {
 public:
  using Formula = int32_t;  // atom index
  using Proof = int32_t;    // proof index

  static AbstractSystem load(const AbstractSystemDoc& doc,
                             std::vector<std::string>* warnings = nullptr);
  static AbstractSystem load_text(const std::string& json_text,
                                  std::vector<std::string>* warnings = nullptr);

  /// The system as a document (closed subproofs/ordering, synthesized
  /// trivial proofs included); load(dump(...)) is the identity.
  AbstractSystemDoc dump() const;

  size_t atom_count() const { return atoms_.size(); }
  const std::string& atom_name(Formula f) const { return atoms_[static_cast<size_t>(f)]; }
  std::optional<Formula> find_atom(const std::string& name) const;
  Pres all_atoms() const;
  /// The file's declared starting presentation (all atoms when absent).
  const Pres& default_presentation() const { return default_pres_; }

  size_t proof_count() const { return ids_.size(); }
  const std::string& proof_name(Proof p) const { return ids_[static_cast<size_t>(p)]; }
  std::optional<Proof> find_proof(const std::string& id) const;

  const std::vector<Formula>& premises(Proof p) const {
    return premises_[static_cast<size_t>(p)];
  }
  Formula conclusion(Proof p) const { return concl_[static_cast<size_t>(p)]; }
  const std::vector<Proof>& subproofs(Proof p) const {  // reflexive
    return subs_[static_cast<size_t>(p)];
  }
  std::vector<Proof> proper_subproofs(Proof p) const;
  Proof trivial(Formula f) const;
  bool is_trivial(Proof p) const { return trivial(conclusion(p)) == p; }

  Cmp compare(Proof p, Proof q) const;
  Cmp compare_free(Proof p, Proof q) const { return compare(p, q); }

  const Pres& theorems(const Pres& a);
  const MinProofs& min_proofs_of(const Pres& a);
  const MinProofs& normal_forms(const Pres& a);

  std::optional<Proof> cut_witness(Proof p, Proof q, Proof r) const;

  bool formula_less(Formula f, Formula g) const { return f < g; }
  bool proof_less(Proof p, Proof q) const { return p < q; }
  std::string show_formula(Formula f, bool = true) const { return atom_name(f); }
  std::string show_proof(Proof p, bool = true) const { return proof_name(p); }
  Formula parse_formula(const std::string& name) const;

  std::vector<Proof> all_proofs() const;
  std::vector<Proof> proofs_from(const Pres& a) const;  // Pf(A)

 private:
  std::vector<std::string> atoms_;
  Pres default_pres_;
  std::vector<std::string> ids_;
  std::vector<std::vector<Formula>> premises_;
  std::vector<Formula> concl_;
  std::vector<std::vector<Proof>> subs_;
  std::vector<Proof> trivial_of_;           // per atom
  std::vector<std::vector<Cmp>> order_;     // closed ordering matrix

  std::map<std::vector<Formula>, Pres> theorems_cache_;
  std::map<std::vector<Formula>, MinProofs> min_cache_;
  std::map<std::vector<Formula>, MinProofs> nf_cache_;
};

}  // namespace canon
