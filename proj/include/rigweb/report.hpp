#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace rigweb {

/// Per-case record of a law suite. undefined-sum is a third verdict:
/// a directed law whose left side is Undefined passes vacuously, but the
/// case is still worth listing separately from real passes.
struct CaseResult {
    enum class Status { Pass, Fail, UndefinedSum } status = Status::Pass;
    std::string id;
    std::string witness; // replayable payload on failure / undefined-sum
    long long micros = 0;
};

struct SuiteReport {
    std::string suite_id;
    std::vector<CaseResult> cases;

    int count(CaseResult::Status s) const {
        int n = 0;
        for (auto& c : cases)
            if (c.status == s) ++n;
        return n;
    }
    int passed() const { return count(CaseResult::Status::Pass); }
    int failed() const { return count(CaseResult::Status::Fail); }
    int undefined() const { return count(CaseResult::Status::UndefinedSum); }
    bool ok() const { return failed() == 0; }
};

struct LawReport {
    std::vector<SuiteReport> suites;

    bool ok() const {
        for (auto& s : suites)
            if (!s.ok()) return false;
        return true;
    }
    int failed() const {
        int n = 0;
        for (auto& s : suites) n += s.failed();
        return n;
    }
};

/// Small helper the suites use to accumulate results. Each case is
/// stamped with the time elapsed since the previous one, so the report
/// carries honest per-case costs without suites threading clocks around.
class SuiteSink {
public:
    explicit SuiteSink(std::string id)
        : mark_(std::chrono::steady_clock::now()) {
        report_.suite_id = std::move(id);
    }

    void pass(const std::string& id) { push(CaseResult::Status::Pass, id, ""); }
    void fail(const std::string& id, const std::string& witness) {
        push(CaseResult::Status::Fail, id, witness);
    }
    void undef(const std::string& id, const std::string& witness) {
        push(CaseResult::Status::UndefinedSum, id, witness);
    }
    void check(const std::string& id, bool okay, const std::string& witness) {
        if (okay)
            pass(id);
        else
            fail(id, witness);
    }

    SuiteReport take() { return std::move(report_); }

private:
    void push(CaseResult::Status st, const std::string& id, const std::string& witness) {
        auto now = std::chrono::steady_clock::now();
        long long us =
            std::chrono::duration_cast<std::chrono::microseconds>(now - mark_).count();
        mark_ = now;
        report_.cases.push_back({st, id, witness, us});
    }

    SuiteReport report_;
    std::chrono::steady_clock::time_point mark_;
};

} // namespace rigweb
