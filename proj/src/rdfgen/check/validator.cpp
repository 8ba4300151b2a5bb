#include "rdfgen/check/validator.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include "rdfgen/rdf/vocab.hpp"
#include "rdfgen/shacl/constraints.hpp"

namespace rdfgen::check {

using rdf::Graph;
using rdf::Term;
using shacl::ConstraintSet;
using shacl::ValueSpace;

namespace {

// Comparable projection of a literal; monostate means "not comparable".
struct Comparable {
  enum class Kind { None, Integer, Real, Date, String } kind = Kind::None;
  long long integer = 0;
  double real = 0;
  std::string text;
};

Comparable comparable(const Term& value) {
  Comparable out;
  if (!value.is_literal()) return out;
  switch (shacl::value_space(value)) {
    case ValueSpace::Integer:
      if (auto v = shacl::parse_integer(value)) {
        out.kind = Comparable::Kind::Integer;
        out.integer = *v;
        out.real = static_cast<double>(*v);
      }
      return out;
    case ValueSpace::Real:
      if (auto v = shacl::parse_real(value)) {
        out.kind = Comparable::Kind::Real;
        out.real = *v;
      }
      return out;
    case ValueSpace::Date:
      if (auto v = shacl::parse_date_days(value)) {
        out.kind = Comparable::Kind::Date;
        out.integer = *v;
      }
      return out;
    case ValueSpace::String:
      out.kind = Comparable::Kind::String;
      out.text = value.lexical();
      return out;
    default: return out;
  }
}

bool numeric(const Comparable& c) {
  return c.kind == Comparable::Kind::Integer || c.kind == Comparable::Kind::Real;
}

// -1 / 0 / +1 when comparable, nullopt otherwise.
std::optional<int> compare(const Comparable& a, const Comparable& b) {
  if (a.kind == Comparable::Kind::None || b.kind == Comparable::Kind::None) return std::nullopt;
  if (numeric(a) && numeric(b)) {
    if (a.kind == Comparable::Kind::Integer && b.kind == Comparable::Kind::Integer) {
      return a.integer < b.integer ? -1 : a.integer > b.integer ? 1 : 0;
    }
    return a.real < b.real ? -1 : a.real > b.real ? 1 : 0;
  }
  if (a.kind == Comparable::Kind::Date && b.kind == Comparable::Kind::Date) {
    return a.integer < b.integer ? -1 : a.integer > b.integer ? 1 : 0;
  }
  if (a.kind == Comparable::Kind::String && b.kind == Comparable::Kind::String) {
    return a.text < b.text ? -1 : a.text > b.text ? 1 : 0;
  }
  return std::nullopt;
}

std::string strip_anchors(const std::string& pattern) {
  std::string out = pattern;
  if (!out.empty() && out.front() == '^') out.erase(out.begin());
  if (!out.empty() && out.back() == '$' && (out.size() < 2 || out[out.size() - 2] != '\\')) {
    out.pop_back();
  }
  return out;
}

class Validator {
 public:
  Validator(const Graph& data, const shacl::RootShapeMap& root) : data_(data), root_(root) {
    for (auto& shape : root.shapes) {
      if (shape.shape_id.is_iri()) {
        models_.emplace(shape.shape_id.iri_value(), shacl::normalize(shape));
      }
    }
  }

  Report run() {
    Report report;
    for (auto& shape : root_.shapes) {
      if (!shape.shape_id.is_iri()) continue;
      for (auto& node : focus_nodes(shape)) {
        check_node(node, models_.at(shape.shape_id.iri_value()), report.violations);
      }
    }
    report.conforms = report.violations.empty();
    return report;
  }

  Report run_for(const std::vector<std::pair<Term, std::string>>& focus) {
    Report report;
    for (auto& [node, shape_iri] : focus) {
      auto model = models_.find(shape_iri);
      if (model == models_.end()) continue;
      check_node(node, model->second, report.violations);
    }
    report.conforms = report.violations.empty();
    return report;
  }

 private:
  const Graph& data_;
  const shacl::RootShapeMap& root_;
  std::map<std::string, ConstraintSet> models_;
  std::map<std::string, std::regex> regex_cache_;

  std::vector<Term> focus_nodes(const shacl::ShapeMap& shape) {
    std::set<Term> nodes;
    const ConstraintSet& model = models_.at(shape.shape_id.iri_value());
    if (model.target_class) {
      for (auto& t : data_.match(std::nullopt, Term::iri(std::string(vocab::rdf_type)),
                                 Term::iri(*model.target_class))) {
        nodes.insert(t.subject);
      }
    }
    for (auto ns : {vocab::shacl_ns, vocab::shacl_ns_upper}) {
      for (auto& t : data_.match(std::nullopt, Term::iri(std::string(ns) + "description"),
                                 shape.shape_id)) {
        nodes.insert(t.subject);
      }
    }
    return {nodes.begin(), nodes.end()};
  }

  const std::regex& compiled(const std::string& pattern) {
    auto it = regex_cache_.find(pattern);
    if (it == regex_cache_.end()) {
      it = regex_cache_.emplace(pattern, std::regex(strip_anchors(pattern))).first;
    }
    return it->second;
  }

  void check_node(const Term& node, const ConstraintSet& model,
                  std::vector<Violation>& out) {
    for (auto& property : model.properties) check_property(node, property, out);
    check_node_logicals(node, model, out);
  }

  void check_property(const Term& node, const ConstraintSet& cs, std::vector<Violation>& out) {
    std::vector<Term> values = data_.objects(node, Term::iri(cs.path));

    if (cs.min_count && static_cast<long long>(values.size()) < *cs.min_count) {
      out.push_back({node, cs.path, "minCount",
                     "found " + std::to_string(values.size()) + " values, expected at least " +
                         std::to_string(*cs.min_count)});
    }
    if (cs.max_count && static_cast<long long>(values.size()) > *cs.max_count) {
      out.push_back({node, cs.path, "maxCount",
                     "found " + std::to_string(values.size()) + " values, expected at most " +
                         std::to_string(*cs.max_count)});
    }

    for (auto& value : values) check_value(node, cs, value, out);
    check_pairs(node, cs, values, out);
  }

  void check_value(const Term& node, const ConstraintSet& cs, const Term& value,
                   std::vector<Violation>& out) {
    if (cs.datatype) {
      if (!value.is_literal() || value.datatype() != *cs.datatype) {
        out.push_back({node, cs.path, "datatype",
                       value.to_string() + " is not of datatype <" + *cs.datatype + ">"});
      }
    }

    Comparable v = comparable(value);
    auto check_bound = [&](const std::optional<Term>& bound, const char* name, int lo,
                           int hi) {
      if (!bound) return;
      auto cmp = compare(v, comparable(*bound));
      // Bounds of a different value space do not apply (a string postal
      // code is not measured against numeric bounds).
      if (!cmp) return;
      if (*cmp < lo || *cmp > hi) {
        out.push_back({node, cs.path, name,
                       value.to_string() + " violates sh:" + name + " " + bound->to_string()});
      }
    };
    check_bound(cs.min_inclusive, "minInclusive", 0, 1);
    check_bound(cs.max_inclusive, "maxInclusive", -1, 0);
    check_bound(cs.min_exclusive, "minExclusive", 1, 1);
    check_bound(cs.max_exclusive, "maxExclusive", -1, -1);

    if (value.is_literal()) {
      long long length = static_cast<long long>(value.lexical().size());
      if (cs.min_length && length < *cs.min_length) {
        out.push_back({node, cs.path, "minLength",
                       value.to_string() + " is shorter than " + std::to_string(*cs.min_length)});
      }
      if (cs.max_length && length > *cs.max_length) {
        out.push_back({node, cs.path, "maxLength",
                       value.to_string() + " is longer than " + std::to_string(*cs.max_length)});
      }
      if (cs.pattern && !std::regex_match(value.lexical(), compiled(*cs.pattern))) {
        out.push_back(
            {node, cs.path, "pattern",
             value.to_string() + " does not match pattern '" + *cs.pattern + "'"});
      }
    }

    if (cs.in_values) {
      if (std::find(cs.in_values->begin(), cs.in_values->end(), value) == cs.in_values->end()) {
        out.push_back({node, cs.path, "in", value.to_string() + " is not an allowed value"});
      }
    }

    if (cs.node_ref) {
      bool ok = value.is_iri();
      if (ok) {
        auto model = models_.find(*cs.node_ref);
        if (model != models_.end()) {
          std::vector<Violation> probe;
          check_node(value, model->second, probe);
          ok = probe.empty();
        }
      }
      if (!ok) {
        out.push_back({node, cs.path, "node",
                       value.to_string() + " does not conform to shape <" + *cs.node_ref + ">"});
      }
    }

    check_value_logicals(node, cs, value, out);
  }

  // A value-level branch carries refinements of the same value slot.
  bool value_satisfies_branch(const Term& value, const ConstraintSet& branch) {
    std::vector<Violation> probe;
    ConstraintSet flat = branch;
    flat.path = "?";
    flat.min_count.reset();
    flat.max_count.reset();
    check_value(Term::blank("probe"), flat, value, probe);
    return probe.empty();
  }

  void check_value_logicals(const Term& node, const ConstraintSet& cs, const Term& value,
                            std::vector<Violation>& out) {
    auto count_satisfied = [&](const std::vector<ConstraintSet>& branches) {
      std::size_t n = 0;
      for (auto& branch : branches) {
        if (value_satisfies_branch(value, branch)) ++n;
      }
      return n;
    };
    if (!cs.or_.empty() && count_satisfied(cs.or_) == 0) {
      out.push_back({node, cs.path, "or", value.to_string() + " satisfies no sh:or branch"});
    }
    if (!cs.xone.empty() && count_satisfied(cs.xone) != 1) {
      out.push_back(
          {node, cs.path, "xone", value.to_string() + " must satisfy exactly one branch"});
    }
    if (!cs.and_.empty() && count_satisfied(cs.and_) != cs.and_.size()) {
      out.push_back(
          {node, cs.path, "and", value.to_string() + " fails an sh:and branch"});
    }
  }

  void check_pairs(const Term& node, const ConstraintSet& cs, const std::vector<Term>& values,
                   std::vector<Violation>& out) {
    auto peers = [&](const std::string& path) { return data_.objects(node, Term::iri(path)); };

    auto ordered = [&](const std::optional<std::string>& target, bool strict,
                       const char* name) {
      if (!target) return;
      std::vector<Term> others = peers(*target);
      for (auto& v : values) {
        for (auto& w : others) {
          auto cmp = compare(comparable(v), comparable(w));
          bool ok = cmp && (strict ? *cmp < 0 : *cmp <= 0);
          if (!ok) {
            out.push_back({node, cs.path, name,
                           v.to_string() + (cmp ? " is not " : " is not comparable and ") +
                               (strict ? "< " : "<= ") + w.to_string()});
          }
        }
      }
    };
    ordered(cs.less_than, true, "lessThan");
    ordered(cs.less_than_or_equals, false, "lessThanOrEquals");

    if (cs.equals) {
      std::vector<Term> others = peers(*cs.equals);
      std::multiset<Term> a(values.begin(), values.end());
      std::multiset<Term> b(others.begin(), others.end());
      if (a != b) {
        out.push_back({node, cs.path, "equals",
                       "value set differs from <" + *cs.equals + ">"});
      }
    }
    if (cs.disjoint) {
      std::vector<Term> others = peers(*cs.disjoint);
      for (auto& v : values) {
        if (std::find(others.begin(), others.end(), v) != others.end()) {
          out.push_back({node, cs.path, "disjoint",
                         v.to_string() + " also appears under <" + *cs.disjoint + ">"});
        }
      }
    }
  }

  // Node-level branch: satisfied when every member property is present and
  // clean (or, for a single-path branch, that path is present and clean).
  bool node_satisfies_branch(const Term& node, const ConstraintSet& branch) {
    std::vector<const ConstraintSet*> members;
    if (!branch.path.empty()) members.push_back(&branch);
    for (auto& member : branch.properties) members.push_back(&member);
    if (members.empty()) return false;
    for (auto* member : members) {
      std::vector<Term> values = data_.objects(node, Term::iri(member->path));
      if (values.empty()) return false;
      std::vector<Violation> probe;
      check_property(node, *member, probe);
      if (!probe.empty()) return false;
    }
    return true;
  }

  void check_node_logicals(const Term& node, const ConstraintSet& model,
                           std::vector<Violation>& out) {
    auto count_satisfied = [&](const std::vector<ConstraintSet>& branches) {
      std::size_t n = 0;
      for (auto& branch : branches) {
        if (node_satisfies_branch(node, branch)) ++n;
      }
      return n;
    };
    if (!model.xone.empty() && count_satisfied(model.xone) != 1) {
      out.push_back({node, "", "xone", "node must satisfy exactly one sh:xone branch"});
    }
    if (!model.or_.empty() && count_satisfied(model.or_) == 0) {
      out.push_back({node, "", "or", "node satisfies no sh:or branch"});
    }
    if (!model.and_.empty() && count_satisfied(model.and_) != model.and_.size()) {
      out.push_back({node, "", "and", "node fails an sh:and branch"});
    }
  }
};

}  // namespace

std::string Report::to_text() const {
  std::ostringstream out;
  out << "conforms: " << (conforms ? "true" : "false") << "\n";
  out << to_tsv();
  return out.str();
}

std::string Report::to_tsv() const {
  std::ostringstream out;
  for (auto& v : violations) {
    out << v.node.to_string() << "\t" << (v.path.empty() ? "-" : v.path) << "\t" << v.constraint
        << "\t" << v.detail << "\n";
  }
  return out.str();
}

Report validate(const Graph& data, const shacl::RootShapeMap& root) {
  return Validator(data, root).run();
}

Report validate_nodes(const Graph& data, const shacl::RootShapeMap& root,
                      const std::vector<std::pair<Term, std::string>>& focus) {
  return Validator(data, root).run_for(focus);
}

}  // namespace rdfgen::check
