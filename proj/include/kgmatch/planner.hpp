#pragma once

#include <map>
#include <string>
#include <vector>

#include "kgmatch/profile.hpp"
#include "kgmatch/rdf.hpp"

namespace kgmatch {

enum class OrderMeasure { Classes, Instances, ModelSize };
enum class OrderDirection { Ascending, Descending };

struct OrderingSpec {
    OrderMeasure measure = OrderMeasure::ModelSize;
    OrderDirection direction = OrderDirection::Descending;
};

std::string to_string(const OrderingSpec& spec);
OrderingSpec parse_ordering(const std::string& text);

enum class Linkage { Single, Average, Complete };

std::string to_string(Linkage linkage);
Linkage parse_linkage(const std::string& text);

enum class Strategy { AllPairs, TpWindow, TpFirst, TpSim, ImOrder, ImSim };

std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& text);

// One binary matching step. Refs name either a leaf KG id or the union
// produced by an earlier task ("union:<taskIndex>").
struct MatchTask {
    std::string source_ref;
    std::string target_ref;
    std::size_t task_index = 0;

    bool operator==(const MatchTask&) const = default;
};

struct ExecutionPlan {
    std::vector<MatchTask> tasks;
    bool merge_after_match = false;
    bool closure_needed = false;
    std::string strategy_name;

    static std::string union_ref(std::size_t task_index) {
        return "union:" + std::to_string(task_index);
    }
    static bool is_union_ref(const std::string& ref) { return ref.starts_with("union:"); }
};

// Plan dump: taskIndex<TAB>sourceRef<TAB>targetRef<TAB>mergeAfterMatch.
std::string serialize_plan(const ExecutionPlan& plan);

// Sorts KG ids by the requested measure; ties resolve to ascending
// lexicographic id order under both directions.
std::vector<std::string> order_kgs(const std::vector<const KnowledgeGraph*>& kgs,
                                   const OrderingSpec& spec);

ExecutionPlan plan_all_pairs(const std::vector<std::string>& kg_ids);
ExecutionPlan plan_windowing(const std::vector<std::string>& ordered_ids);
ExecutionPlan plan_first_vs_rest(const std::vector<std::string>& ordered_ids);

// Kruskal MST over distance = 1 - cosine; ties break on the lexicographic
// (smaller, larger) id pair. Task order is edge-acceptance order.
ExecutionPlan plan_tp_similarity(const SimilarityMatrix& sim);

// Left-deep incremental merge chain over the given order.
ExecutionPlan plan_im_order(const std::vector<std::string>& ordered_ids);

// Agglomerative clustering over leaf-profile distances; the dendrogram's
// merge sequence is the plan. Cluster ids for tie-breaking are each
// cluster's lexicographically smallest leaf id.
ExecutionPlan plan_im_similarity(const SimilarityMatrix& sim, Linkage linkage);

}  // namespace kgmatch
