#ifndef QFLAG_REPORT_HPP
#define QFLAG_REPORT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qflag {

/// One offending entry of an identity check. Indices are 1-based, -1 when unused.
struct CheckFailure {
    std::string family;
    int i = -1;
    int j = -1;
    std::string row;
    std::string col;
    std::string lhs;
    std::string rhs;
};

struct FamilyResult {
    std::string name;
    bool pass = true;
    std::size_t checked = 0;
};

/// Outcome of a verification suite; passes iff no failures were recorded.
class VerifyReport {
public:
    static constexpr std::size_t kMaxRecordedFailures = 32;

    VerifyReport() = default;
    VerifyReport(std::string suite, std::string subject) : suite_(std::move(suite)), subject_(std::move(subject)) {}

    const std::string& suite() const { return suite_; }
    const std::string& subject() const { return subject_; }
    bool pass() const { return failure_count_ == 0; }
    std::size_t failure_count() const { return failure_count_; }
    const std::vector<CheckFailure>& failures() const { return failures_; }
    const std::vector<std::string>& conventions() const { return conventions_; }
    const std::vector<FamilyResult>& families() const { return families_; }

    void add_convention(std::string note) { conventions_.push_back(std::move(note)); }

    /// Starts a named family; later checks and failures are counted against it.
    void begin_family(std::string name) { families_.push_back({std::move(name), true, 0}); }

    void count_check() {
        if (!families_.empty()) ++families_.back().checked;
    }

    void fail(CheckFailure f) {
        if (!families_.empty()) {
            families_.back().pass = false;
            if (f.family.empty()) f.family = families_.back().name;
        }
        ++failure_count_;
        if (failures_.size() < kMaxRecordedFailures) failures_.push_back(std::move(f));
    }

    /// Folds another report's families and failures into this one.
    void merge(const VerifyReport& other) {
        for (const auto& fam : other.families_) families_.push_back(fam);
        for (const auto& f : other.failures_)
            if (failures_.size() < kMaxRecordedFailures) failures_.push_back(f);
        failure_count_ += other.failure_count_;
        for (const auto& c : other.conventions_) conventions_.push_back(c);
    }

private:
    std::string suite_;
    std::string subject_;
    std::size_t failure_count_ = 0;
    std::vector<CheckFailure> failures_;
    std::vector<std::string> conventions_;
    std::vector<FamilyResult> families_;
};

}  // namespace qflag

#endif  // QFLAG_REPORT_HPP
