#include <dpdi/harness.hh>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

using std::string;
using std::vector;

namespace dpdi
{
    namespace
    {
        enum class Verdict
        {
            Agree,
            Disagree,
            Budget
        };

        struct Result
        {
            Verdict verdict = Verdict::Agree;
            Disagreement disagreement;
        };
    }

    auto run_checks(const string & suite, vector<Check> checks, unsigned threads) -> VerificationReport
    {
        auto start = std::chrono::steady_clock::now();
        vector<Result> results(checks.size());
        std::atomic<std::size_t> next{0};

        auto work = [&] {
            for (std::size_t i; (i = next++) < checks.size();) {
                try {
                    if (auto bad = checks[i].run()) {
                        results[i].verdict = Verdict::Disagree;
                        results[i].disagreement = {checks[i].instance, bad->first, bad->second};
                    }
                }
                catch (const BudgetExceeded &) {
                    results[i].verdict = Verdict::Budget;
                }
            }
        };

        if (threads == 0)
            threads = std::max(1u, std::thread::hardware_concurrency());
        threads = std::min<unsigned>(threads, std::max<std::size_t>(1, checks.size()));
        if (threads <= 1)
            work();
        else {
            vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back(work);
            for (auto & t : pool)
                t.join();
        }

        VerificationReport report;
        report.suite = suite;
        report.instances_checked = checks.size();
        for (auto & r : results)
            switch (r.verdict) {
            case Verdict::Agree: ++report.agreements; break;
            case Verdict::Disagree: report.disagreements.push_back(r.disagreement); break;
            case Verdict::Budget: ++report.budget_hits; break;
            }
        std::sort(report.disagreements.begin(), report.disagreements.end());
        report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }

    auto format_report_text(const VerificationReport & r) -> string
    {
        std::ostringstream out;
        char elapsed[32];
        std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_seconds);
        out << "suite " << r.suite << '\n'
            << "instances " << r.instances_checked << '\n'
            << "agreements " << r.agreements << '\n'
            << "disagreements " << r.disagreements.size() << '\n'
            << "budget_hits " << r.budget_hits << '\n'
            << "elapsed " << elapsed << "s\n";
        for (auto & d : r.disagreements)
            out << "disagreement " << d.instance << " expected " << d.expected << " got " << d.got << '\n';
        return out.str();
    }

    auto format_report_structured(const VerificationReport & r) -> string
    {
        nlohmann::json doc;
        doc["suite"] = r.suite;
        doc["instancesChecked"] = r.instances_checked;
        doc["agreements"] = r.agreements;
        auto list = nlohmann::json::array();
        for (auto & d : r.disagreements)
            list.push_back({{"instance", d.instance}, {"expected", d.expected}, {"got", d.got}});
        doc["disagreements"] = list;
        doc["budgetHits"] = r.budget_hits;
        doc["elapsed"] = r.elapsed_seconds;
        return doc.dump(1) + "\n";
    }
}
