#include "socsim/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace socsim {

const char* to_string(Termination term) {
    return term == Termination::StopReached ? "stop_reached" : "cap_exceeded";
}

void SimulationConfig::validate() const {
    if (actors == 0 || concept_candidates == 0 || instance_candidates == 0)
        throw std::invalid_argument("pool sizes must be positive");
    if (stop_target == 0) throw std::invalid_argument("stop target must be >= 1");
    if (iteration_cap < stop_target)
        throw std::invalid_argument("iteration cap must cover the stop target");
    if (efforts.ue_pc <= 0 || efforts.ue_pi <= 0 || efforts.ue_sa <= 0)
        throw std::invalid_argument("effort levels must be > 0");
    if (params.alpha <= 0 || params.beta <= 0)
        throw std::invalid_argument("alpha and beta must be > 0");
    if (solver.damping <= 0 || solver.damping >= 1)
        throw std::invalid_argument("damping must be in (0,1)");
    if (solver.tolerance <= 0 || solver.max_iterations <= 0)
        throw std::invalid_argument("solver tolerance and max iterations must be positive");
    if (ranking_cadence == 0) throw std::invalid_argument("ranking cadence must be >= 1");
}

Engine::Engine(const SimulationConfig& config)
    : config_(config),
      rng_(config.seed),
      ranker_(config.algorithm, config.solver, mix_seed(config.seed, 0x72616e6bULL)) {
    config_.validate();
    CandidatePools pools = generate_pools(
        {config_.actors, config_.concept_candidates, config_.instance_candidates,
         config_.iteration_cap},
        rng_);
    store_ = std::make_unique<Store>(std::move(pools.actors), std::move(pools.concepts),
                                     std::move(pools.instances));
    unpublished_concepts_.resize(config_.concept_candidates);
    for (std::uint32_t i = 0; i < config_.concept_candidates; ++i) unpublished_concepts_[i] = i;
    unpublished_instances_.resize(config_.instance_candidates);
    for (std::uint32_t i = 0; i < config_.instance_candidates; ++i)
        unpublished_instances_[i] = i;
    snapshot_ = ranker_.compute(store_->graph());
}

Engine::Estimate Engine::attempt_publish_concept(ActorId actor) {
    Estimate est;
    if (unpublished_concepts_.empty()) return est;  // pool exhausted, attempt fails
    est.selectable = true;
    const std::size_t pos = rng_.uniform_index(unpublished_concepts_.size());
    const ConceptId cid = unpublished_concepts_[pos];
    est.concept_id = cid;

    const Concept& c = store_->concept_at(cid);
    const Actor& a = store_->actor(actor);
    est.gate.cost =
        cost_publish_concept(c.size, c.quality, a.expertise,
                             expertise_decay(a.published_concepts), config_.params.alpha,
                             config_.efforts.ue_pc);

    const auto& ranked_concepts = snapshot_.list(EntityKind::Concept);
    double tcq = 1.0;  // optimistic before any concept exists
    std::size_t covered_by_top = 0;
    if (!ranked_concepts.empty()) {
        const ConceptId top = ranked_concepts.front().first;
        tcq = store_->concept_at(top).quality;
        covered_by_top = store_->instances_annotated_by(top);
    }
    const double tcp = tcp_driver(store_->published_concepts().size(),
                                  store_->published_instances().size(), covered_by_top);
    est.gate.reward = reward_publish_concept(c.quality, config_.params.beta, tcq, tcp);

    if (est.gate.executed()) {
        store_->add_publication(EntityKind::Concept, cid, actor);
        unpublished_concepts_[pos] = unpublished_concepts_.back();
        unpublished_concepts_.pop_back();
    }
    return est;
}

Engine::Estimate Engine::attempt_publish_instance(ActorId actor) {
    Estimate est;
    if (unpublished_instances_.empty()) return est;
    est.selectable = true;
    const std::size_t pos = rng_.uniform_index(unpublished_instances_.size());
    const InstanceId iid = unpublished_instances_[pos];
    est.instance = iid;

    const Actor& a = store_->actor(actor);
    est.gate.cost = cost_publish_instance(expertise_decay(a.published_instances),
                                          config_.efforts.ue_pi);
    est.gate.reward = reward_publish_instance(store_->instance(iid).quality);

    if (est.gate.executed()) {
        store_->add_publication(EntityKind::Instance, iid, actor);
        unpublished_instances_[pos] = unpublished_instances_.back();
        unpublished_instances_.pop_back();
    }
    return est;
}

Engine::Estimate Engine::attempt_annotation(ActorId actor) {
    Estimate est;
    if (store_->published_concepts().empty() || store_->published_instances().empty())
        return est;
    est.selectable = true;

    // Concept: the actor's own concepts plus the ranking's top 10. Under the
    // random algorithm the snapshot is a permutation, so its head doubles as
    // the 10-random-concepts fallback and choice cost / visibility stay
    // consistent with the ranks the actor saw.
    std::vector<ConceptId> pool = store_->concepts_of(actor);
    const auto& ranked = snapshot_.list(EntityKind::Concept);
    for (std::size_t i = 0; i < std::min<std::size_t>(10, ranked.size()); ++i)
        pool.push_back(ranked[i].first);
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    const ConceptId cid = pool[rng_.uniform_index(pool.size())];

    // Instance: the actor's own unannotated instances first, then anything.
    std::vector<InstanceId> own_unannotated;
    for (InstanceId i : store_->instances_of(actor)) {
        if (store_->instance(i).annotation_count == 0) own_unannotated.push_back(i);
    }
    const InstanceId iid =
        own_unannotated.empty()
            ? store_->published_instances()[rng_.uniform_index(
                  store_->published_instances().size())]
            : own_unannotated[rng_.uniform_index(own_unannotated.size())];
    est.concept_id = cid;
    est.instance = iid;

    const Concept& c = store_->concept_at(cid);
    const Instance& inst = store_->instance(iid);
    const Actor& a = store_->actor(actor);
    const int concept_rank = snapshot_.rank_of(EntityKind::Concept, cid);
    const int instance_rank = snapshot_.rank_of(EntityKind::Instance, iid);
    const double cc = choice_cost(concept_rank, c.author == static_cast<std::int64_t>(actor));
    const double ci =
        choice_cost(instance_rank, inst.author == static_cast<std::int64_t>(actor));
    est.gate.cost = cost_semantic_annotation(expertise_decay(a.annotations_made), cc, ci,
                                             config_.efforts.ue_sa);
    est.gate.reward = reward_semantic_annotation(visibility(concept_rank),
                                                 visibility(instance_rank), c.quality,
                                                 inst.quality);

    if (est.gate.executed()) {
        // A duplicate triple draw is a failed attempt, not a re-draw.
        if (store_->add_annotation(actor, cid, iid) != AddResult::Ok) est.selectable = false;
    }
    return est;
}

void Engine::after_success() {
    if (++successes_since_ranking_ >= config_.ranking_cadence) {
        snapshot_ = ranker_.update(snapshot_, store_->graph());
        successes_since_ranking_ = 0;
    }
}

bool Engine::step() {
    if (iterations_ >= config_.iteration_cap || sa_successes_ >= config_.stop_target)
        return false;
    ++iterations_;

    const ActorId actor = static_cast<ActorId>(rng_.uniform_index(store_->actor_count()));
    const EventKind kind = draw_activity_type(rng_);
    counters_.attempts[static_cast<int>(kind)] += 1;

    Estimate est;
    switch (kind) {
        case EventKind::PublishConcept: est = attempt_publish_concept(actor); break;
        case EventKind::PublishInstance: est = attempt_publish_instance(actor); break;
        case EventKind::SemanticAnnotation: est = attempt_annotation(actor); break;
    }
    const bool success = est.selectable && est.gate.executed();
    events_.push_back({iterations_, kind, actor, est.concept_id, est.instance, success});
    if (success) {
        counters_.successes[static_cast<int>(kind)] += 1;
        after_success();
        if (kind == EventKind::SemanticAnnotation) {
            ++sa_successes_;
            trace_.push_back(
                make_trace_record(*store_, snapshot_, counters_, sa_successes_, iterations_));
        }
    }
    return iterations_ < config_.iteration_cap && sa_successes_ < config_.stop_target;
}

SimulationOutcome Engine::finish() {
    SimulationOutcome out;
    out.termination = sa_successes_ >= config_.stop_target ? Termination::StopReached
                                                           : Termination::CapExceeded;
    out.iterations = iterations_;
    out.counters = counters_;
    out.trace = std::move(trace_);
    out.events = std::move(events_);
    out.published_concepts = store_->published_concepts().size();
    out.published_instances = store_->published_instances().size();
    out.annotations = store_->annotation_total();
    return out;
}

SimulationOutcome run(const SimulationConfig& config) {
    Engine engine(config);
    while (engine.step()) {
    }
    return engine.finish();
}

}  // namespace socsim
