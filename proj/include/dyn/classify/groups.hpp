#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dyn/dynamics/normal_form.hpp"
#include "dyn/galois/frobenius.hpp"
#include "dyn/perm/fingerprint.hpp"
#include "dyn/perm/lattice.hpp"

namespace dyn {

// The generic Galois group of Phi_n for one family, its subgroup classes, and
// the names attached to them. Names are assigned from fingerprints and
// containment relations; a rule that fits several classes raises
// AmbiguousLabel. Classes without a name are called "c<k>" (k = 1-based
// position in the lattice), except that the no-auto n = 4 catalog also names
// the unresolved part of its candidate set "U1", "U2", ... in lattice order.
class GroupCatalog {
 public:
  GroupCatalog(Family f, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  const SubgroupLattice& lattice() const { return *lattice_; }
  const PermGroup& ambient() const { return lattice_->group(); }
  const std::string& ambient_label() const { return ambient_label_; }

  // Named classes in presentation order (ambient first).
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_label(const std::string& label) const { return by_label_.count(label) > 0; }
  std::size_t class_index(const std::string& label) const;  // throws InvalidArgument
  const PermGroup& group(const std::string& label) const { return lattice_->representative(class_index(label)); }
  // Every label attached to the class (several when rules coincide).
  std::vector<std::string> labels_of(std::size_t cls) const;
  // The name of a class: its first label, or "c<k>".
  std::string name_of(std::size_t cls) const;
  const GroupFingerprint& fingerprint_of(std::size_t cls) const;

  // Named sets of labels: "all" for every class name; for no-auto n = 4 also
  // "R", "F", "U" and "P" = R + U.
  std::vector<std::string> label_set(const std::string& name) const;
  std::vector<LabeledGroup> candidates(const std::vector<std::string>& labels) const;

 private:
  void label_no_auto_3();
  void label_auto_3();
  void label_auto_4();
  void label_no_auto_4();
  std::size_t pick(const std::string& label, const std::vector<std::size_t>& pool,
                   const std::function<bool(std::size_t)>& pred);
  void name(const std::string& label, std::size_t cls);

  Family family_;
  int n_;
  std::unique_ptr<SubgroupLattice> lattice_;
  std::string ambient_label_;
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> by_label_;
  std::map<std::size_t, std::string> by_class_;
  std::map<std::string, std::vector<std::string>> sets_;
  mutable std::vector<std::unique_ptr<GroupFingerprint>> fingerprints_;
};

// Shared, lazily built catalogs for n in {3, 4}.
const GroupCatalog& group_catalog(Family f, int n);

}  // namespace dyn
