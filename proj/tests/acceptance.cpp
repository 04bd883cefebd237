// Acceptance run: one PASS/FAIL line per criterion, with wall time.
// Exit status is nonzero when any criterion fails.

#include <qfive/qfive.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace qfive;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

struct Criterion {
    int number;
    std::string name;
    double budget_s;  // 0 = no time bound
    std::function<Outcome()> check;
};

/// Every id passes, either as printed or in its documented corrected form.
Outcome all_pass(const std::vector<std::string>& ids, long order) {
    Outcome out{true, ""};
    std::vector<std::string> corrected, failed;
    for (const auto& id : ids) {
        if (verify(id, BigRat(order), Variant::AsStated).passed) continue;
        if (lookup(id).has(Variant::Corrected) && verify(id, BigRat(order), Variant::Corrected).passed) {
            corrected.push_back(id);
            continue;
        }
        failed.push_back(id);
    }
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
        return s;
    };
    out.passed = failed.empty();
    out.detail = std::to_string(ids.size()) + " formulas at order " + std::to_string(order);
    if (!corrected.empty()) out.detail += "; corrected variant only: " + join(corrected);
    if (!failed.empty()) out.detail += "; failed: " + join(failed);
    return out;
}

Outcome single(const std::string& id, long order) {
    IdentityReport r = verify(id, BigRat(order));
    return {r.passed, report_line(r)};
}

Outcome numeric(const std::string& id, int samples) {
    NumericCheck c = run_numeric(id, samples);
    return {c.passed, numeric_line(c)};
}

}  // namespace

int main() {
    std::vector<std::string> t1 = {"T1a", "T1b", "T1c", "T1d", "T1e", "T1f"};
    std::vector<std::string> d;
    for (int i = 1; i <= 12; ++i) d.push_back("D" + std::to_string(i));
    std::vector<std::string> suite = {"R1",   "R2",   "R3",   "R4",   "R5",   "R6",   "FK5", "FK6",
                                      "C511", "C521", "C611", "C621", "PS1a", "PS1b", "PS2a", "PS2b",
                                      "ME5",  "ME6",  "ODE5", "ODE6", "W5",   "W6"};

    const std::vector<Criterion> criteria = {
        {1, "eta^5(tau)/eta(5tau) = 1 - 5 sum A(n) q^n, n <= 50", 1.0, [] { return single("E1", 51); }},
        {2, "eta^5(5tau)/eta(tau) = sum B(n) q^n, n <= 50", 1.0, [] { return single("E2", 50); }},
        {3, "Ramanujan congruence series, n <= 30", 1.0,
         [] {
             Outcome o = single("E3", 31);
             bool spots = partition_p(4) == 5 && partition_p(9) == 30 && partition_p(14) == 135;
             o.passed = o.passed && spots;
             o.detail += spots ? "; p(4)=5 p(9)=30 p(14)=135" : "; partition spot values wrong";
             return o;
         }},
        {4, "theta sum = triple product, 12 characteristics, 20 q-orders", 2.0,
         [] {
             int ok = 0;
             for (const auto& ch : catalog_characteristics())
                 ok += series_equal(theta_const(ch, 0, BigRat(20)), theta_const_product(ch, BigRat(20))).passed ? 1 : 0;
             return Outcome{ok == 12, std::to_string(ok) + "/12 characteristics agree"};
         }},
        {5, "heat equation term by term, 12 characteristics", 0,
         [] {
             int ok = 0;
             for (int i = 1; i <= 12; ++i) {
                 char id[16];
                 std::snprintf(id, sizeof id, "HEAT-%02d", i);
                 ok += verify(id, BigRat(20)).passed ? 1 : 0;
             }
             return Outcome{ok == 12, std::to_string(ok) + "/12 characteristics satisfy theta'' = 4 pi i d/dtau theta"};
         }},
        {6, "level-five Jacobi formulas T1a-T1f, 20 q-orders", 5.0, [t1] { return all_pass(t1, 20); }},
        {7, "derivative formulas D1-D12, 15 q-orders", 0, [d] { return all_pass(d, 15); }},
        {8, "level-five and level-six relation suite, 20 q-orders", 0, [suite] { return all_pass(suite, 20); }},
        {9, "numeric suite: three-term relations, log-derivative, residues, periods, zeros", 10.0,
         [] {
             std::vector<Outcome> parts = {numeric("N1", 20), numeric("N2", 20), numeric("N3", 5), numeric("N4", 50),
                                           numeric("N5", 12)};
             Outcome o{true, ""};
             for (const auto& p : parts) {
                 o.passed = o.passed && p.passed;
                 o.detail += (o.detail.empty() ? "" : "\n      ") + p.detail;
             }
             return o;
         }},
        {10, "exact/numeric bridge at tau = 0.2 + 1.4i", 0, [] { return numeric("N7", 1); }},
    };

    bool all = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o = c.check();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = c.budget_s == 0 || secs < c.budget_s;
        bool ok = o.passed && in_time;
        all = all && ok;
        std::printf("%s %2d  %s  (%.3f s", ok ? "PASS" : "FAIL", c.number, c.name.c_str(), secs);
        if (c.budget_s > 0) std::printf(", budget %.0f s", c.budget_s);
        std::printf(")\n      %s%s\n", o.detail.c_str(), in_time ? "" : "\n      over time budget");
    }
    return all ? 0 : 1;
}
