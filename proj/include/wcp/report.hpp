#ifndef WCP_REPORT_HPP
#define WCP_REPORT_HPP

#include <wcp/fdvect.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wcp {

/// Every label a report may carry, in output order.
inline const std::vector<std::string_view>& label_registry() {
    static const std::vector<std::string_view> labels = {
        // FinVect and kernel
        "split-square", "split-idempotent", "split-inj-proj", "split-proj-inj",
        "monoid-unit-left", "monoid-unit-right", "monoid-assoc", "module-unit", "module-assoc",
        // single quadruple
        "wmeas-wcp", "idem-wcp", "nabla-left-linear", "twis-wcp", "cocy2-wcp", "idemp-sigma-inv",
        "fi-nab", "c1", "aw", "c11", "aw1",
        "mu-assoc", "mu-normalized", "otra-prop", "vieja-proof", "mu-small-assoc",
        // preunits
        "preunit", "nabla-nu-idempotent", "pre1-wcp", "pre2-wcp", "pre3-wcp", "preunit-idemp",
        "nabla-nu", "beta-nu", "beta-nu-linear", "beta-nu-unit", "beta-bar-mult", "beta-bar-unit",
        "m-left-linear", "m-normalized", "fi-wcp", "sigma-wcp", "round-trip",
        // iteration
        "falso-idemp", "falso-idemp2", "falso-idemp-link", "twisting-i", "twisting-ii",
        "sigma1", "sigma2", "sigma3", "pre-1", "pre-2", "iterated-preunit",
        "degenerate-w", "degenerate-vw",
        // isomorphism
        "new-it-1", "new-it-2", "new-it-3", "i-axv-mult", "i-axv-unit",
        "nabla-axv-w-idempotent", "nabla-axv-w-linear", "nabla-rank", "outer-nabla",
        "omega-inverse-left", "omega-inverse-right", "omega-p", "monoid-iso-mult", "monoid-iso-unit",
        // distributive laws and their relatives
        "W1", "W2", "W3", "W4", "W5", "W6", "DL1", "DL2", "DL3", "DL4", "WDL1", "WDL2", "idem=idem",
        "equ-idem", "new-nabla", "tech2", "tech3", "nabla-identity", "YB-Comp",
        "dl-closed-form", "dl-unit", "product1", "newsig", "wdl-preunit",
        "brz1", "brz2", "brz3", "brz-unit", "DP1", "DP2", "DP3", "DP4", "dp-necessity", "dp-iterated-brz",
        "wdl-found"};
    return labels;
}

inline std::size_t label_rank(std::string_view label) {
    const auto& reg = label_registry();
    auto it = std::find(reg.begin(), reg.end(), label);
    if (it == reg.end()) throw std::logic_error("unregistered report label '" + std::string(label) + "'");
    return static_cast<std::size_t>(it - reg.begin());
}

/// Where two morphisms first disagree: input basis multi-index (one
/// coordinate per domain factor), output multi-index, and both values.
struct Witness {
    std::vector<std::size_t> input;
    std::vector<std::size_t> output;
    std::string lhs;
    std::string rhs;
};

struct Check {
    std::string label;
    std::string part;  // which side of a multi-term display, when there are several
    std::string scope; // which structure the equation was evaluated on
    bool pass = false;
    std::optional<Witness> witness;
    std::string note;
};

struct Skip {
    std::string label;
    std::string scope;
    std::string reason;
};

class Report {
public:
    const std::vector<Check>& checks() const noexcept { return checks_; }
    const std::vector<Skip>& skipped() const noexcept { return skipped_; }

    bool ok() const {
        return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
    }

    bool passed(std::string_view label) const {
        bool seen = false;
        for (const auto& c : checks_)
            if (c.label == label) {
                if (!c.pass) return false;
                seen = true;
            }
        return seen;
    }

    bool has(std::string_view label) const {
        return std::any_of(checks_.begin(), checks_.end(), [&](const Check& c) { return c.label == label; });
    }

    const Check* first_failure() const {
        for (const auto& c : checks_)
            if (!c.pass) return &c;
        return nullptr;
    }

    Check& add(Check c) {
        label_rank(c.label);
        checks_.push_back(std::move(c));
        return checks_.back();
    }

    void flag(std::string label, bool pass, std::string note = {}, std::string part = {}) {
        Check c;
        c.label = std::move(label);
        c.part = std::move(part);
        c.pass = pass;
        c.note = std::move(note);
        add(std::move(c));
    }

    void skip(std::string label, std::string reason) {
        label_rank(label);
        skipped_.push_back({std::move(label), {}, std::move(reason)});
    }

    /// Appends `other`; checks that carry no scope yet receive `scope`.
    Report& merge(const Report& other, const std::string& scope = {}) {
        for (Check c : other.checks_) {
            if (c.scope.empty()) c.scope = scope;
            checks_.push_back(std::move(c));
        }
        for (Skip s : other.skipped_) {
            if (s.scope.empty()) s.scope = scope;
            skipped_.push_back(std::move(s));
        }
        return *this;
    }

    /// Stable sort by registry position. Output order is then independent of
    /// the order in which checks happened to run.
    Report sorted() const {
        Report r(*this);
        std::stable_sort(r.checks_.begin(), r.checks_.end(),
                         [](const Check& a, const Check& b) { return label_rank(a.label) < label_rank(b.label); });
        std::stable_sort(r.skipped_.begin(), r.skipped_.end(),
                         [](const Skip& a, const Skip& b) { return label_rank(a.label) < label_rank(b.label); });
        return r;
    }

private:
    std::vector<Check> checks_;
    std::vector<Skip> skipped_;
};

/// Decides lhs == rhs and records the outcome under `label`.
inline bool check_equal(Report& report, std::string label, const FMor& lhs, const FMor& rhs,
                        std::string part = {}) {
    if (lhs.mat.rows() != rhs.mat.rows() || lhs.mat.cols() != rhs.mat.cols())
        throw DimensionError(label + ": sides have shapes " + lhs.signature() + " and " + rhs.signature());
    Check c;
    c.label = std::move(label);
    c.part = std::move(part);
    auto d = first_difference(lhs.mat, rhs.mat);
    c.pass = !d.has_value();
    if (d) {
        Witness w;
        w.input = lhs.dom.unflatten(d->col);
        w.output = lhs.cod.unflatten(d->row);
        w.lhs = lhs.mat(d->row, d->col).to_string();
        w.rhs = rhs.mat(d->row, d->col).to_string();
        c.witness = std::move(w);
    }
    bool pass = c.pass;
    report.add(std::move(c));
    return pass;
}

/// Thrown by builders whose hypotheses fail; carries the full report.
class PreconditionError : public Error {
public:
    PreconditionError(std::string where, Report report)
        : Error(message(where, report)), report_(std::move(report)) {}
    const Report& report() const noexcept { return report_; }

private:
    static std::string message(const std::string& where, const Report& r) {
        const Check* c = r.first_failure();
        std::string s = where + ": precondition failed";
        if (c) {
            s += " [" + c->label + (c->part.empty() ? "" : "/" + c->part) + "]";
            if (!c->scope.empty()) s += " on " + c->scope;
            if (c->witness) s += " lhs=" + c->witness->lhs + " rhs=" + c->witness->rhs;
        }
        return s;
    }
    Report report_;
};

/// A post-condition that the theory guarantees did not hold. Reaching this
/// means the composite wiring is wrong.
class InternalError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

inline void require(const Report& r, const std::string& where) {
    if (!r.ok()) throw PreconditionError(where, r);
}

inline void ensure(const Report& r, const std::string& where) {
    if (!r.ok()) throw InternalError(where + " (post-check)", r);
}

} // namespace wcp

#endif
