#include "canon/abstract.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace canon {

using nlohmann::json;

AbstractSystemDoc parse_abstract_doc(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw CanonError(std::string("abstract system is not valid JSON: ") + e.what());
  }
  AbstractSystemDoc doc;
  try {
    for (const auto& a : j.at("atoms")) doc.atoms.push_back(a.get<std::string>());
    for (const auto& p : j.at("proofs")) {
      AbstractProofDecl d;
      d.id = p.at("id").get<std::string>();
      for (const auto& x : p.at("premises")) d.premises.push_back(x.get<std::string>());
      d.conclusion = p.at("conclusion").get<std::string>();
      if (p.contains("subproofs")) {
        for (const auto& x : p.at("subproofs")) d.subproofs.push_back(x.get<std::string>());
      }
      doc.proofs.push_back(std::move(d));
    }
    if (j.contains("ordering")) {
      for (const auto& pair : j.at("ordering")) {
        doc.ordering.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
      }
    }
    if (j.contains("presentation")) {
      for (const auto& a : j.at("presentation")) doc.presentation.push_back(a.get<std::string>());
    }
  } catch (const json::exception& e) {
    throw CanonError(std::string("abstract system is missing fields: ") + e.what());
  }
  return doc;
}

std::string dump_abstract_doc(const AbstractSystemDoc& doc) {
  json j;
  j["atoms"] = doc.atoms;
  j["proofs"] = json::array();
  for (const auto& p : doc.proofs) {
    json jp;
    jp["id"] = p.id;
    jp["premises"] = p.premises;
    jp["conclusion"] = p.conclusion;
    jp["subproofs"] = p.subproofs;
    j["proofs"].push_back(jp);
  }
  j["ordering"] = json::array();
  for (const auto& [g, l] : doc.ordering) {
    j["ordering"].push_back(json::array({g, l}));
  }
  if (!doc.presentation.empty()) j["presentation"] = doc.presentation;
  return j.dump(2) + "\n";
}

AbstractSystem AbstractSystem::load_text(const std::string& text,
                                         std::vector<std::string>* warnings) {
  return load(parse_abstract_doc(text), warnings);
}

AbstractSystem AbstractSystem::load(const AbstractSystemDoc& doc,
                                    std::vector<std::string>* warnings) {
  AbstractSystem sys;
  std::map<std::string, Formula> atom_ids;
  for (const auto& a : doc.atoms) {
    if (atom_ids.count(a)) throw CanonError("duplicate atom '" + a + "'");
    atom_ids[a] = static_cast<Formula>(sys.atoms_.size());
    sys.atoms_.push_back(a);
  }
  for (const auto& a : doc.presentation) {
    auto it = atom_ids.find(a);
    if (it == atom_ids.end()) throw CanonError("presentation references unknown atom '" + a + "'");
    sys.default_pres_.insert(it->second);
  }
  std::map<std::string, Proof> proof_ids;
  auto atom_of = [&](const std::string& name) {
    auto it = atom_ids.find(name);
    if (it == atom_ids.end()) throw CanonError("unknown atom '" + name + "'");
    return it->second;
  };
  for (const auto& d : doc.proofs) {
    if (proof_ids.count(d.id)) throw CanonError("duplicate proof id '" + d.id + "'");
    Proof p = static_cast<Proof>(sys.ids_.size());
    proof_ids[d.id] = p;
    sys.ids_.push_back(d.id);
    std::vector<Formula> prem;
    for (const auto& a : d.premises) prem.push_back(atom_of(a));
    std::sort(prem.begin(), prem.end());
    prem.erase(std::unique(prem.begin(), prem.end()), prem.end());
    sys.premises_.push_back(std::move(prem));
    sys.concl_.push_back(atom_of(d.conclusion));
  }
  // subproofs: resolve, add self, close transitively, check acyclicity
  std::vector<std::set<Proof>> subs(sys.ids_.size());
  for (size_t i = 0; i < doc.proofs.size(); ++i) {
    subs[i].insert(static_cast<Proof>(i));
    for (const auto& sid : doc.proofs[i].subproofs) {
      auto it = proof_ids.find(sid);
      if (it == proof_ids.end()) {
        throw CanonError("proof '" + doc.proofs[i].id + "' references undefined subproof '" +
                         sid + "'");
      }
      subs[i].insert(it->second);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < subs.size(); ++i) {
      for (Proof q : std::vector<Proof>(subs[i].begin(), subs[i].end())) {
        for (Proof r : subs[static_cast<size_t>(q)]) {
          if (subs[i].insert(r).second) changed = true;
        }
      }
    }
  }
  for (size_t i = 0; i < subs.size(); ++i) {
    for (Proof q : subs[i]) {
      if (q != static_cast<Proof>(i) && subs[static_cast<size_t>(q)].count(static_cast<Proof>(i))) {
        throw CanonError("subproof relation has a cycle between '" + sys.ids_[i] + "' and '" +
                         sys.ids_[static_cast<size_t>(q)] + "'");
      }
    }
  }
  for (auto& s : subs) sys.subs_.emplace_back(s.begin(), s.end());

  // trivial proofs: find or synthesize one per atom
  sys.trivial_of_.assign(sys.atoms_.size(), -1);
  for (size_t p = 0; p < sys.ids_.size(); ++p) {
    Formula c = sys.concl_[p];
    if (sys.trivial_of_[static_cast<size_t>(c)] >= 0) continue;
    if (sys.premises_[p] == std::vector<Formula>{c} && sys.subs_[p].size() == 1) {
      sys.trivial_of_[static_cast<size_t>(c)] = static_cast<Proof>(p);
    }
  }
  for (size_t a = 0; a < sys.atoms_.size(); ++a) {
    if (sys.trivial_of_[a] >= 0) continue;
    std::string id = "triv_" + sys.atoms_[a];
    while (proof_ids.count(id)) id += "'";
    Proof p = static_cast<Proof>(sys.ids_.size());
    proof_ids[id] = p;
    sys.ids_.push_back(id);
    sys.premises_.push_back({static_cast<Formula>(a)});
    sys.concl_.push_back(static_cast<Formula>(a));
    sys.subs_.push_back({p});
    sys.trivial_of_[a] = p;
    if (warnings) {
      warnings->push_back("synthesized trivial proof '" + id + "' for atom '" + sys.atoms_[a] +
                          "'");
    }
  }

  // ordering: resolve, same-conclusion check, transitive closure, acyclicity
  size_t n = sys.ids_.size();
  sys.order_.assign(n, std::vector<Cmp>(n, Cmp::Incomparable));
  for (size_t i = 0; i < n; ++i) sys.order_[i][i] = Cmp::Equal;
  auto proof_of = [&](const std::string& id) {
    auto it = proof_ids.find(id);
    if (it == proof_ids.end()) throw CanonError("ordering references undefined proof '" + id + "'");
    return it->second;
  };
  for (const auto& [gs, ls] : doc.ordering) {
    Proof g = proof_of(gs), l = proof_of(ls);
    if (sys.concl_[static_cast<size_t>(g)] != sys.concl_[static_cast<size_t>(l)]) {
      throw CanonError("ordering pair (" + gs + " > " + ls + ") relates different conclusions");
    }
    if (g == l) throw CanonError("ordering pair relates '" + gs + "' to itself");
    sys.order_[static_cast<size_t>(g)][static_cast<size_t>(l)] = Cmp::Greater;
    sys.order_[static_cast<size_t>(l)][static_cast<size_t>(g)] = Cmp::Less;
  }
  changed = true;
  while (changed) {
    changed = false;
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        if (sys.order_[a][b] != Cmp::Greater) continue;
        for (size_t c = 0; c < n; ++c) {
          if (sys.order_[b][c] == Cmp::Greater && sys.order_[a][c] != Cmp::Greater) {
            if (a == c || sys.order_[a][c] == Cmp::Less) {
              throw CanonError("declared proof ordering has a cycle through '" + sys.ids_[a] +
                               "'");
            }
            sys.order_[a][c] = Cmp::Greater;
            sys.order_[c][a] = Cmp::Less;
            changed = true;
          }
        }
      }
    }
  }
  return sys;
}

AbstractSystemDoc AbstractSystem::dump() const {
  AbstractSystemDoc doc;
  doc.atoms = atoms_;
  for (Formula f : default_pres_) doc.presentation.push_back(atoms_[static_cast<size_t>(f)]);
  for (size_t p = 0; p < ids_.size(); ++p) {
    AbstractProofDecl d;
    d.id = ids_[p];
    for (Formula f : premises_[p]) d.premises.push_back(atoms_[static_cast<size_t>(f)]);
    d.conclusion = atoms_[static_cast<size_t>(concl_[p])];
    for (Proof q : subs_[p]) d.subproofs.push_back(ids_[static_cast<size_t>(q)]);
    doc.proofs.push_back(std::move(d));
  }
  for (size_t a = 0; a < ids_.size(); ++a) {
    for (size_t b = 0; b < ids_.size(); ++b) {
      if (order_[a][b] == Cmp::Greater) doc.ordering.emplace_back(ids_[a], ids_[b]);
    }
  }
  return doc;
}

std::optional<AbstractSystem::Formula> AbstractSystem::find_atom(const std::string& name) const {
  for (size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i] == name) return static_cast<Formula>(i);
  }
  return std::nullopt;
}

AbstractSystem::Formula AbstractSystem::parse_formula(const std::string& name) const {
  if (auto f = find_atom(name)) return *f;
  throw CanonError("unknown atom '" + name + "'");
}

Pres AbstractSystem::all_atoms() const {
  Pres out;
  for (size_t i = 0; i < atoms_.size(); ++i) out.insert(static_cast<Formula>(i));
  return out;
}

std::optional<AbstractSystem::Proof> AbstractSystem::find_proof(const std::string& id) const {
  for (size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] == id) return static_cast<Proof>(i);
  }
  return std::nullopt;
}

std::vector<AbstractSystem::Proof> AbstractSystem::proper_subproofs(Proof p) const {
  std::vector<Proof> out;
  for (Proof q : subs_[static_cast<size_t>(p)]) {
    if (q != p) out.push_back(q);
  }
  return out;
}

AbstractSystem::Proof AbstractSystem::trivial(Formula f) const {
  return trivial_of_[static_cast<size_t>(f)];
}

Cmp AbstractSystem::compare(Proof p, Proof q) const {
  return order_[static_cast<size_t>(p)][static_cast<size_t>(q)];
}

std::vector<AbstractSystem::Proof> AbstractSystem::all_proofs() const {
  std::vector<Proof> out;
  for (size_t i = 0; i < ids_.size(); ++i) out.push_back(static_cast<Proof>(i));
  return out;
}

std::vector<AbstractSystem::Proof> AbstractSystem::proofs_from(const Pres& a) const {
  std::vector<Proof> out;
  for (size_t p = 0; p < ids_.size(); ++p) {
    bool ok = true;
    for (Formula f : premises_[p]) {
      if (!a.count(f)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(static_cast<Proof>(p));
  }
  return out;
}

const Pres& AbstractSystem::theorems(const Pres& a) {
  std::vector<Formula> key(a.begin(), a.end());
  auto it = theorems_cache_.find(key);
  if (it != theorems_cache_.end()) return it->second;
  Pres th;
  for (Proof p : proofs_from(a)) th.insert(conclusion(p));
  return theorems_cache_.emplace(std::move(key), std::move(th)).first->second;
}

const MinProofs& AbstractSystem::min_proofs_of(const Pres& a) {
  std::vector<Formula> key(a.begin(), a.end());
  auto it = min_cache_.find(key);
  if (it != min_cache_.end()) return it->second;
  MinProofs mp;
  auto pf = proofs_from(a);
  for (Proof p : pf) {
    bool dominated = false;
    for (Proof q : pf) {
      if (compare(q, p) == Cmp::Less) {
        dominated = true;
        break;
      }
    }
    if (!dominated) mp.by_conclusion[conclusion(p)].push_back(p);
  }
  return min_cache_.emplace(std::move(key), std::move(mp)).first->second;
}

const MinProofs& AbstractSystem::normal_forms(const Pres& a) {
  std::vector<Formula> key(a.begin(), a.end());
  auto it = nf_cache_.find(key);
  if (it != nf_cache_.end()) return it->second;
  MinProofs nf = min_proofs_of(theorems(a));
  return nf_cache_.emplace(std::move(key), std::move(nf)).first->second;
}

std::optional<AbstractSystem::Proof> AbstractSystem::cut_witness(Proof p, Proof q,
                                                                 Proof r) const {
  std::set<Formula> allowed(premises_[static_cast<size_t>(p)].begin(),
                            premises_[static_cast<size_t>(p)].end());
  for (Formula f : premises_[static_cast<size_t>(r)]) allowed.insert(f);
  for (size_t v = 0; v < ids_.size(); ++v) {
    Proof vp = static_cast<Proof>(v);
    if (compare(p, vp) != Cmp::Greater) continue;
    const auto& vsubs = subs_[v];
    if (std::find(vsubs.begin(), vsubs.end(), r) == vsubs.end()) continue;
    bool ok = true;
    for (Formula f : premises_[v]) {
      if (!allowed.count(f)) {
        ok = false;
        break;
      }
    }
    if (ok) return vp;
  }
  (void)q;
  return std::nullopt;
}

}  // namespace canon
