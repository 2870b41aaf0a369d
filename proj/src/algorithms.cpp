#include "pricing/algorithms.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <cmath>

namespace pricing {

namespace {

bool endpoint_check_failed(const DyadicPrice& left, const DyadicPrice& right, Feedback at_left,
                           Feedback at_right) {
    bool fail_left = !at_left.sale && left.numerator != 0;
    bool fail_right = at_right.sale && right.value() < 1.0;
    return fail_left || fail_right;
}

}  // namespace

CheckOutcome safety_check(NodeRef node, Environment& env) {
    auto [left, right] = endpoints(node);
    Feedback at_left = env.post_price(left);
    if (env.exhausted()) return {CheckResult::Pass, 1, true};
    Feedback at_right = env.post_price(right);
    bool fail = endpoint_check_failed(left, right, at_left, at_right);
    return {fail ? CheckResult::Fail : CheckResult::Pass, 2, false};
}

StepOutcome CommitKnownStrategy::step(SearchState& state, Environment& env) {
    NodeRef leaf = state.current();
    auto [left, right] = endpoints(leaf);
    std::int64_t& counter = state.leaf_counters[leaf.index];
    if (counter <= budget_) {
        Feedback at_left = env.post_price(left);
        if (env.exhausted()) return {StepKind::CommitContinue, 1, true};
        Feedback at_right = env.post_price(right);
        if (endpoint_check_failed(left, right, at_left, at_right)) {
            state.path.pop_back();
            return {StepKind::CommitFail, 2, false};
        }
        ++counter;
        return {StepKind::CommitContinue, 2, false};
    }
    if (!true_commit_leaf_) true_commit_leaf_ = leaf;
    env.post_price(left);
    return {StepKind::CommitContinue, 1, false};
}

StepOutcome CommitUnknownStrategy::step(SearchState& state, Environment& env) {
    NodeRef leaf = state.current();
    auto [left, right] = endpoints(leaf);

    Feedback first = env.post_price(left);
    if (!first.sale && left.numerator != 0) {
        state.path.pop_back();
        return {StepKind::CommitFail, 1, false};
    }
    std::int64_t& counter = state.leaf_counters[leaf.index];
    ++counter;
    if (env.exhausted()) return {StepKind::CommitContinue, 1, true};

    double q = std::min(4.0 * std::log(static_cast<double>(horizon_) / delta_) /
                            static_cast<double>(counter),
                        1.0);
    if (rng_.bernoulli(q)) {
        Feedback at_right = env.post_price(right);
        if (at_right.sale && right.value() < 1.0) {
            state.path.pop_back();
            return {StepKind::CommitFail, 2, false};
        }
    } else {
        Feedback second = env.post_price(left);
        if (!second.sale && left.numerator != 0) {
            state.path.pop_back();
            return {StepKind::CommitFail, 2, false};
        }
    }
    return {StepKind::CommitContinue, 2, false};
}

StepOutcome meta_step(SearchState& state, Environment& env, CommitStrategy& commit) {
    NodeRef current = state.current();
    if (!is_leaf(current, state.params)) {
        CheckOutcome check = safety_check(current, env);
        if (check.truncated) return {StepKind::Backtrack, check.rounds_consumed, true};
        if (check.result == CheckResult::Fail) {
            // Cannot happen at the root: both its endpoint checks pass by default.
            assert(state.path.size() > 1);
            state.path.pop_back();
            return {StepKind::Backtrack, 2, false};
        }
        if (env.exhausted()) return {StepKind::DescendLeft, 2, true};
        Feedback at_mid = env.post_price(midpoint(current));
        NodeRef child = at_mid.sale ? right_child(current) : left_child(current);
        state.path.push_back(child);
        return {at_mid.sale ? StepKind::DescendRight : StepKind::DescendLeft, 3, false};
    }
    return commit.step(state, env);
}

std::int64_t rivest_query_budget(std::int64_t n, std::int64_t corruption) {
    using boost::multiprecision::cpp_int;
    if (n < 2) throw std::invalid_argument("rivest_query_budget: n must be >= 2");
    if (corruption < 0) throw std::invalid_argument("rivest_query_budget: C must be >= 0");

    const std::int64_t c = corruption;
    auto holds = [&](std::int64_t q_prime) {
        std::int64_t m = q_prime - c;
        if (m <= 0) return false;
        cpp_int sum = 0;
        cpp_int binom = 1;  // binom(m, 0)
        for (std::int64_t i = 0; i <= c && i <= m; ++i) {
            sum += binom;
            binom = binom * (m - i) / (i + 1);
        }
        return (cpp_int{1} << m) > cpp_int{n} * sum;
    };

    std::int64_t ceil_log_n = 0;
    while ((std::int64_t{1} << ceil_log_n) < n) ++ceil_log_n;
    std::int64_t lo = c + 1;
    std::int64_t hi = c + 16 * (ceil_log_n + c);  // upper bracket, always satisfiable
    while (!holds(hi)) hi *= 2;                   // defensive; the bracket should suffice
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (holds(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

namespace {

void commit_to_left_endpoint(NodeRef node, Environment& env) {
    DyadicPrice left = endpoints(node).first;
    while (!env.exhausted()) env.post_price(left);
}

}  // namespace

BaselineRun majority_vote_searcher(TreeParams params, std::int64_t corruption, Environment& env) {
    NodeRef current{0, 0};
    const std::int64_t repetitions = 2 * corruption + 1;
    while (!is_leaf(current, params) && !env.exhausted()) {
        DyadicPrice mid = midpoint(current);
        std::int64_t sales = 0;
        std::int64_t asked = 0;
        for (std::int64_t i = 0; i < repetitions && !env.exhausted(); ++i) {
            if (env.post_price(mid).sale) ++sales;
            ++asked;
        }
        if (asked < repetitions) break;  // horizon ran out mid-query
        current = (2 * sales > repetitions) ? right_child(current) : left_child(current);
    }
    bool completed = is_leaf(current, params);
    commit_to_left_endpoint(current, env);
    return {current, completed};
}

BaselineRun plain_binary_search(TreeParams params, Environment& env) {
    NodeRef current{0, 0};
    while (!is_leaf(current, params) && !env.exhausted()) {
        Feedback at_mid = env.post_price(midpoint(current));
        current = at_mid.sale ? right_child(current) : left_child(current);
    }
    bool completed = is_leaf(current, params);
    commit_to_left_endpoint(current, env);
    return {current, completed};
}

}  // namespace pricing
