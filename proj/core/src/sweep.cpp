#include "otto/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <functional>
#include <map>
#include <thread>
#include <tuple>
#include <variant>

#include "otto/error.hpp"

namespace otto {
namespace {

// Runs job(i) for i in [0, n) on up to `workers` threads. Each job writes
// only its own slot, so the outcome does not depend on scheduling.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& job) {
    const auto threads = static_cast<std::size_t>(std::max(1, workers));
    if (threads == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) {
            job(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(std::min(threads, n));
    for (std::size_t t = 0; t < std::min(threads, n); ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                job(i);
            }
        });
    }
}

std::string error_kind(const std::exception_ptr& error) {
    try {
        std::rethrow_exception(error);
    } catch (const Error& e) {
        return e.kind();
    } catch (const std::exception&) {
        return "InternalError";
    }
}

// Field integrals do not depend on the couplings or gaps, so grid points that
// share a bath and worldline share them. Keys hold the exact doubles.
using HotKey = std::tuple<double, double, double>;          // T_h, v_h, R
using ColdKey = std::tuple<double, double, double, double>;  // T_c, v_c, R, proper delta_tau

HotKey hot_key(const OttoConfig& c) { return {c.temperature_hot, c.speed_hot, c.radius}; }
ColdKey cold_key(const OttoConfig& c) {
    return {c.temperature_cold, c.speed_cold, c.radius, cold_kick_separation(c)};
}

template <class Value>
using Outcome = std::variant<Value, std::string>;  // value or error kind

}  // namespace

std::vector<ResultRow> sweep(const SweepSpec& spec, int workers) {
    if (workers < 1) {
        throw RangeError("workers must be at least 1, got " + std::to_string(workers));
    }
    spec.validate();

    const std::size_t n = spec.size();
    std::vector<ResultRow> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].config = spec.point(i);
    }

    std::map<HotKey, std::size_t> hot_index;
    std::map<ColdKey, std::size_t> cold_index;
    std::vector<const OttoConfig*> hot_reps;
    std::vector<const OttoConfig*> cold_reps;
    for (const ResultRow& row : rows) {
        if (hot_index.emplace(hot_key(row.config), hot_reps.size()).second) {
            hot_reps.push_back(&row.config);
        }
        if (cold_index.emplace(cold_key(row.config), cold_reps.size()).second) {
            cold_reps.push_back(&row.config);
        }
    }

    std::vector<Outcome<double>> hot(hot_reps.size());
    std::vector<Outcome<WightmanValues>> cold(cold_reps.size());
    parallel_for(hot_reps.size() + cold_reps.size(), workers, [&](std::size_t i) {
        try {
            if (i < hot_reps.size()) {
                hot[i] = hot_field_variance(*hot_reps[i]);
            } else {
                const std::size_t j = i - hot_reps.size();
                cold[j] = cold_fields(*cold_reps[j]);
            }
        } catch (...) {
            const std::string kind = error_kind(std::current_exception());
            if (i < hot_reps.size()) {
                hot[i] = kind;
            } else {
                cold[i - hot_reps.size()] = kind;
            }
        }
    });

    parallel_for(n, workers, [&](std::size_t i) {
        ResultRow& row = rows[i];
        const auto& h = hot[hot_index.at(hot_key(row.config))];
        const auto& c = cold[cold_index.at(cold_key(row.config))];
        if (const auto* kind = std::get_if<std::string>(&h)) {
            row.error_flag = *kind;
            return;
        }
        if (const auto* kind = std::get_if<std::string>(&c)) {
            row.error_flag = *kind;
            return;
        }
        try {
            row.result = close_cycle(row.config, make_hot_stroke(row.config, std::get<double>(h)),
                                     make_cold_stroke(row.config, std::get<WightmanValues>(c)));
        } catch (...) {
            row.error_flag = error_kind(std::current_exception());
        }
    });
    return rows;
}

int default_workers() {
    if (const char* env = std::getenv("OTTO_WORKERS")) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
        if (ec == std::errc{} && *ptr == '\0' && value > 0) {
            return value;
        }
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

}  // namespace otto
