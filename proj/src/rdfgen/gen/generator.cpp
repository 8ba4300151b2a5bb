#include "rdfgen/gen/generator.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>

#include "rdfgen/gen/value_gen.hpp"
#include "rdfgen/rdf/turtle.hpp"
#include "rdfgen/rdf/vocab.hpp"
#include "rdfgen/shacl/constraints.hpp"

namespace rdfgen::gen {

using rdf::Graph;
using rdf::Term;
using shacl::ConstraintSet;
using shacl::PairPlan;
using shacl::PairRelation;

namespace {

constexpr int kMaxDepth = 32;
constexpr int kRetryBudget = 100;

long long days_today() {
  using namespace std::chrono;
  return floor<days>(system_clock::now()).time_since_epoch().count();
}

bool is_date_property(const ConstraintSet& cs) {
  auto dt = shacl::infer_datatype(cs);
  return dt && *dt == vocab::xsd_date;
}

// Lower-bound lift per pair-target property, so that a source drawn later
// always finds room below its peer. Propagated in reverse generation order
// (sources first), which carries lifts through chains like
// startDate < datePublished <= endDate.
std::map<std::string, long long> pair_lifts(const std::vector<ConstraintSet>& props,
                                            const PairPlan& plan, long long today) {
  std::map<std::string, const ConstraintSet*> by_path;
  for (auto& cs : props) by_path[cs.path] = &cs;

  std::map<std::string, long long> lift;
  for (auto path_it = plan.order.rbegin(); path_it != plan.order.rend(); ++path_it) {
    auto source_it = by_path.find(*path_it);
    if (source_it == by_path.end()) continue;
    const ConstraintSet& source = *source_it->second;

    for (auto& edge : plan.edges) {
      if (edge.source != source.path || edge.relation == PairRelation::Disjoint) continue;
      auto target_it = by_path.find(edge.target);
      if (target_it == by_path.end()) continue;
      const ConstraintSet& target = *target_it->second;

      bool date = is_date_property(source) || is_date_property(target);
      long long source_lo = date ? resolved_date_bounds(source, today).lo
                                 : resolved_integer_bounds(source).lo;
      if (auto it = lift.find(source.path); it != lift.end()) {
        source_lo = std::max(source_lo, it->second);
      }
      long long bump = edge.relation == PairRelation::LessThan ? 1 : 0;
      auto [it, inserted] = lift.emplace(edge.target, source_lo + bump);
      if (!inserted) it->second = std::max(it->second, source_lo + bump);
    }
  }
  return lift;
}

void apply_lift(ConstraintSet& cs, long long lift_value, long long today) {
  bool date = is_date_property(cs);
  long long current =
      date ? resolved_date_bounds(cs, today).lo : resolved_integer_bounds(cs).lo;
  if (lift_value <= current) return;
  if (date) {
    cs.min_inclusive = Term::literal(shacl::format_date(lift_value), std::string(vocab::xsd_date));
  } else {
    cs.min_inclusive = Term::literal(std::to_string(lift_value), std::string(vocab::xsd_integer));
  }
  cs.min_exclusive.reset();
}

// Overlays a logical branch's constraints onto the property.
void merge_branch(ConstraintSet& base, const ConstraintSet& branch) {
  if (branch.datatype) base.datatype = branch.datatype;
  if (branch.pattern) base.pattern = branch.pattern;
  if (branch.min_length) base.min_length = branch.min_length;
  if (branch.max_length) base.max_length = branch.max_length;
  if (branch.min_inclusive) base.min_inclusive = branch.min_inclusive;
  if (branch.max_inclusive) base.max_inclusive = branch.max_inclusive;
  if (branch.min_exclusive) base.min_exclusive = branch.min_exclusive;
  if (branch.max_exclusive) base.max_exclusive = branch.max_exclusive;
  if (branch.in_values) base.in_values = branch.in_values;
  if (branch.node_ref) base.node_ref = branch.node_ref;
  if (branch.name) base.name = branch.name;
  if (branch.min_count) base.min_count = branch.min_count;
  if (branch.max_count) base.max_count = branch.max_count;
  if (branch.equals) base.equals = branch.equals;
  if (branch.less_than) base.less_than = branch.less_than;
  if (branch.less_than_or_equals) base.less_than_or_equals = branch.less_than_or_equals;
  if (branch.disjoint) base.disjoint = branch.disjoint;
}

const ConstraintSet& model_for(const shacl::ShapeMap& sm, GenContext& ctx) {
  std::string key =
      sm.shape_id.is_iri() ? sm.shape_id.iri_value() : ("_:" + sm.shape_id.blank_id());
  auto it = ctx.models.find(key);
  if (it != ctx.models.end()) return it->second;
  return ctx.models.emplace(key, shacl::normalize(sm)).first->second;
}

// One instance per entity; sh:node references spawn a fresh one.
class EntityGenerator {
 public:
  EntityGenerator(GenContext& ctx, Graph& out) : ctx_(ctx), out_(out) {}

  Term generate(const shacl::ShapeMap& sm) {
    if (ctx_.depth >= kMaxDepth) {
      throw Error(ErrorKind::RecursionLimit,
                  "sh:node chain exceeds depth " + std::to_string(kMaxDepth) + " at shape " +
                      sm.shape_id.to_string());
    }
    model_ = &model_for(sm, ctx_);
    node_ = ctx_.fresh_node();

    if (model_->target_class) {
      out_.insert(
          {node_, Term::iri(std::string(vocab::rdf_type)), Term::iri(*model_->target_class)});
    }
    out_.insert({node_, Term::iri(ctx_.description_predicate()), sm.shape_id});

    // Chosen node-level logical branches contribute extra properties,
    // generated ahead of the declared ones.
    collect_branch_properties();
    for (auto& cs : model_->properties) push_property(cs);

    plan_ = shacl::plan_pairs(properties_);
    lifts_ = pair_lifts(properties_, plan_, ctx_.today_days);

    for (auto& path : plan_.order) {
      if (const ConstraintSet* cs = property_by_path(path)) generate_property(*cs);
    }
    return node_;
  }

 private:
  GenContext& ctx_;
  Graph& out_;
  const ConstraintSet* model_ = nullptr;
  Term node_;
  std::vector<ConstraintSet> properties_;
  PairPlan plan_;
  std::map<std::string, long long> lifts_;
  std::map<std::string, std::vector<Term>> pair_values_;
  PersonaState persona_;

  const ConstraintSet* property_by_path(const std::string& path) const {
    for (auto& cs : properties_) {
      if (cs.path == path) return &cs;
    }
    return nullptr;
  }

  // Duplicate paths (a branch refining a declared property) merge instead of
  // producing two plan entries.
  void push_property(const ConstraintSet& cs) {
    for (auto& existing : properties_) {
      if (existing.path == cs.path) {
        merge_branch(existing, cs);
        return;
      }
    }
    properties_.push_back(cs);
  }

  void collect_branch_properties() {
    auto expand = [&](const std::vector<const ConstraintSet*>& chosen) {
      for (auto* branch : chosen) {
        if (!branch->path.empty()) push_property(*branch);
        for (auto& member : branch->properties) push_property(member);
      }
    };
    if (!model_->xone.empty()) expand(choose_branch(LogicalKind::Xone, model_->xone, ctx_));
    if (!model_->or_.empty()) expand(choose_branch(LogicalKind::Or, model_->or_, ctx_));
    if (!model_->and_.empty()) expand(choose_branch(LogicalKind::And, model_->and_, ctx_));
  }

  void generate_property(const ConstraintSet& cs) {
    shacl::EffectiveCount count;
    try {
      count = shacl::effective_count(cs);
    } catch (const Error& e) {
      throw Error(e.kind(), std::string(e.what()) + " [property <" + cs.path + ">]");
    }
    long long n = count.low + static_cast<long long>(ctx_.rng.next(count.high - count.low + 1));

    std::vector<std::string> disjoint_partners;
    for (auto& edge : plan_.edges) {
      if (edge.relation != PairRelation::Disjoint) continue;
      if (edge.source == cs.path) disjoint_partners.push_back(edge.target);
      if (edge.target == cs.path) disjoint_partners.push_back(edge.source);
    }

    for (long long i = 0; i < n; ++i) {
      ConstraintSet effective = cs;
      if (!cs.xone.empty()) {
        for (auto* b : choose_branch(LogicalKind::Xone, cs.xone, ctx_)) {
          merge_branch(effective, *b);
        }
      }
      if (!cs.or_.empty()) {
        for (auto* b : choose_branch(LogicalKind::Or, cs.or_, ctx_)) merge_branch(effective, *b);
      }
      if (!cs.and_.empty()) {
        for (auto* b : choose_branch(LogicalKind::And, cs.and_, ctx_)) merge_branch(effective, *b);
      }

      if (effective.node_ref) {
        emit_reference(effective);
        continue;
      }

      if (!effective.datatype) {
        effective.datatype = shacl::infer_datatype(effective, pair_peer(cs));
      }
      if (auto lift = lifts_.find(cs.path); lift != lifts_.end()) {
        apply_lift(effective, lift->second, ctx_.today_days);
      }

      Term value = draw_value(effective, cs);
      value = enforce_disjoint(effective, disjoint_partners, std::move(value));
      // Triples are a set, so repeated draws would silently collapse the
      // value count below sh:minCount; redraw while the value is taken.
      // Halfway through the budget the dictionaries are bypassed, in case
      // the bound value set is smaller than the required distinct count.
      auto& emitted = pair_values_[cs.path];
      for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        if (std::find(emitted.begin(), emitted.end(), value) == emitted.end()) break;
        ctx_.constraints_only = attempt >= kRetryBudget / 2;
        value = draw_value(effective, cs);
        value = enforce_disjoint(effective, disjoint_partners, std::move(value));
        ctx_.constraints_only = false;
      }
      out_.insert({node_, Term::iri(cs.path), value});
      emitted.push_back(std::move(value));
    }
  }

  Term draw_value(const ConstraintSet& effective, const ConstraintSet& declared) {
    struct Relation {
      const std::optional<std::string>* target;
      PairRelation relation;
    };
    const Relation relations[] = {
        {&declared.equals, PairRelation::Equals},
        {&declared.less_than, PairRelation::LessThan},
        {&declared.less_than_or_equals, PairRelation::LessThanOrEquals},
    };
    for (auto& rel : relations) {
      if (!*rel.target) continue;
      auto peer = pair_values_.find(**rel.target);
      if (peer == pair_values_.end() || peer->second.empty()) continue;
      return resolve_pair_value(effective, rel.relation, peer->second.front(), ctx_);
    }
    return generate_object(effective, model_->target_class, persona_, ctx_);
  }

  Term enforce_disjoint(const ConstraintSet& effective,
                        const std::vector<std::string>& partners, Term value) {
    if (partners.empty()) return value;
    auto collides = [&](const Term& v) {
      for (auto& partner : partners) {
        auto it = pair_values_.find(partner);
        if (it == pair_values_.end()) continue;
        if (std::find(it->second.begin(), it->second.end(), v) != it->second.end()) return true;
      }
      return false;
    };
    for (int attempt = 0; attempt < kRetryBudget && collides(value); ++attempt) {
      value = generate_object(effective, model_->target_class, persona_, ctx_);
    }
    if (collides(value)) {
      throw Error(ErrorKind::UnsatisfiableConstraint,
                  "cannot keep <" + effective.path + "> disjoint from its peers");
    }
    return value;
  }

  void emit_reference(const ConstraintSet& cs) {
    if (!ctx_.shape_registry) {
      throw Error(ErrorKind::MissingShape, "no shape registry for sh:node <" + *cs.node_ref + ">");
    }
    const shacl::ShapeMap* referenced = ctx_.shape_registry->find(*cs.node_ref);
    if (!referenced) {
      throw Error(ErrorKind::MissingShape,
                  "sh:node references unknown shape <" + *cs.node_ref + ">");
    }
    ++ctx_.depth;
    Term child = EntityGenerator(ctx_, out_).generate(*referenced);
    --ctx_.depth;
    out_.insert({node_, Term::iri(cs.path), child});
  }

  // The constraint set on the other end of any ordering edge touching cs.
  const ConstraintSet* pair_peer(const ConstraintSet& cs) const {
    for (auto& edge : plan_.edges) {
      if (edge.relation == PairRelation::Disjoint) continue;
      if (edge.source == cs.path) return property_by_path(edge.target);
      if (edge.target == cs.path) return property_by_path(edge.source);
    }
    return nullptr;
  }
};

}  // namespace

GenContext::GenContext(std::uint64_t seed) : rng(seed), today_days(days_today()) {}

std::string GenContext::description_predicate() const {
  std::string ns = shape_registry && !shape_registry->shacl_ns.empty()
                       ? shape_registry->shacl_ns
                       : std::string(vocab::shacl_ns);
  return ns + "description";
}

std::vector<const ConstraintSet*> choose_branch(LogicalKind kind,
                                                const std::vector<ConstraintSet>& branches,
                                                GenContext& ctx) {
  if (branches.empty()) {
    throw Error(ErrorKind::EmptyLogicalList, "logical constraint has no branches");
  }
  std::vector<const ConstraintSet*> chosen;
  if (kind == LogicalKind::And) {
    for (auto& branch : branches) chosen.push_back(&branch);
  } else {
    chosen.push_back(&branches[ctx.rng.next(branches.size())]);
  }
  return chosen;
}

Term generate_entity(const shacl::ShapeMap& sm, GenContext& ctx, Graph& out) {
  return EntityGenerator(ctx, out).generate(sm);
}

Graph generate_graph(const shacl::RootShapeMap& root, GenContext& ctx) {
  if (root.shapes.empty()) {
    throw Error(ErrorKind::MissingShape, "shapes graph contains no node shapes");
  }
  Graph out;
  ctx.shape_registry = &root;
  WarningLog log;
  for (auto& shape_iri : shacl::find_root_shapes(root, &log)) {
    const shacl::ShapeMap* shape = root.find(shape_iri);
    if (!shape) continue;
    for (std::uint64_t i = 0; i < ctx.entity_count; ++i) {
      generate_entity(*shape, ctx, out);
    }
  }
  return out;
}

Graph run_pipeline(std::string_view shapes_source, std::uint64_t entity_count,
                   std::optional<std::uint64_t> seed, const PipelineOptions& options,
                   WarningLog* log) {
  if (entity_count < 1) {
    throw Error(ErrorKind::InvalidArgument, "entity count must be at least 1");
  }
  Graph shapes_graph = rdf::parse_turtle(shapes_source);
  shacl::RootShapeMap root = shacl::extract_shape_maps(shapes_graph, log);

  std::uint64_t effective_seed = seed ? *seed : std::random_device{}();
  GenContext ctx(effective_seed);
  ctx.entity_count = entity_count;
  ctx.base_iri = options.base_iri;
  ctx.node_counter = options.start_index;

  DictionaryRegistry dictionaries = DictionaryRegistry::built_in();
  if (!options.dict_dir.empty()) dictionaries.load_directory(options.dict_dir);
  ctx.dictionaries = &dictionaries;

  Graph out = generate_graph(root, ctx);
  for (auto& [prefix, ns] : shapes_graph.prefixes()) out.add_prefix(prefix, ns);
  return out;
}

}  // namespace rdfgen::gen
