#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <string>
#include <vector>

#include "arcdiag/canonical.hpp"
#include "arcdiag/credit.hpp"
#include "arcdiag/diagram.hpp"
#include "arcdiag/frame_drawing.hpp"
#include "arcdiag/triangulation.hpp"

namespace arcdiag::drawer {

enum class ConfigType { A, B, C, D, E, F, G, H, Iota, J, K };
const char* config_name(ConfigType c);
Credit config_debt(ConfigType c);
inline constexpr Credit kMaxDebt = Credit::eighths(5);

// floor(15 n / 16 - 5 / 2)
int biarc_bound(int n);

enum class AuditLevel { Off, Incremental, Full, Auto };

struct DrawOptions {
    AuditLevel audit = AuditLevel::Auto;  // Auto: full per step up to n = 400
    bool strict = true;                   // throw on a ledger or invariant violation
    long long search_budget = 400000;     // nodes per joint-layout search
};

struct LedgerEntry {
    int i = 0;                // number of vertices after the insertion
    int vertex = 0;
    std::string case_label;
    Credit cost;              // change of forward + reverse potential
    Credit debt_change;       // change of the total open debt
    Credit slack;             // alpha * i - (potential - debt); must stay >= 5
    std::string opened;       // configuration opened or transferred, if any
};

struct DrawStats {
    long long mutations = 0;
    long long searches = 0;
    long long search_nodes = 0;
    int max_backtrack = 0;
    int reorders = 0;
};

struct DrawResult {
    ArcDiagram diagram;
    int forward_biarcs = 0;
    int reverse_biarcs = 0;
    bool chose_reverse = false;
    int bound = 0;
    std::vector<LedgerEntry> ledger;
    CanonicalOrder effective_order;
    DrawStats stats;
    std::vector<std::string> violations;  // only filled when not strict
};

struct OpenConfig {
    ConfigType type;
    std::vector<int> members;  // insertion order
    Credit debt;
};

// Forward and reverse drawings grown together along a canonical ordering.
class DualDrawing {
public:
    DualDrawing(const Triangulation& t, const CanonicalOrder& o, DrawOptions opt = {});
    ~DualDrawing();

    bool done() const { return pending_.empty(); }
    // Inserts the next vertex (possibly after a reordering step).
    const LedgerEntry& step();
    // Inserts all remaining vertices and checks the final debt settlement.
    void run();

    int inserted() const { return inserted_; }
    Credit potential() const { return fwd_->phi() + rev_->phi(); }
    Credit debt() const { return debt_; }
    Credit slack() const { return kAlpha * inserted_ - (potential() - debt_); }
    std::vector<OpenConfig> open_configs() const;

    // Invariant and ledger check; empty string when everything holds.
    std::string audit(bool full) const;

    const FrameDrawing& forward() const { return *fwd_; }
    const FrameDrawing& reverse() const { return *rev_; }
    const std::vector<LedgerEntry>& ledger() const { return ledger_; }
    const std::vector<int>& effective_order() const { return order_; }
    const DrawStats& stats() const { return stats_; }
    const std::vector<std::string>& violations() const { return violations_; }

    // Fewer biarcs wins, ties go to the forward drawing.  The reverse
    // drawing is returned in its own (mirrored) spine order so it is down-up.
    DrawResult select_final() const;

private:
    const Triangulation& t_;
    CanonicalOrder o_;
    DrawOptions opt_;
    std::unique_ptr<FrameDrawing> fwd_, rev_;
    std::deque<int> pending_;
    std::vector<int> order_;
    int inserted_ = 0;
    Credit debt_;
    std::vector<OpenConfig> configs_;   // slot per config id; closed ones have no members
    std::vector<int> config_of_;        // vertex -> config id or -1
    std::vector<LedgerEntry> ledger_;
    DrawStats stats_;
    std::vector<std::string> violations_;
    std::vector<int> pos_;                   // vertex -> index in order_, or -1
    std::vector<std::vector<int>> nbrs_of_;  // contour neighbors at insertion, forward order
    bool full_audit_ = false;
    bool in_reorder_ = false;

    void check_step(const LedgerEntry& e, const std::vector<int>& ff, const std::vector<int>& fr);
    void violation(const std::string& msg);
    void finish();

    friend struct StepRunner;
};

DrawResult draw(const Triangulation& t, const CanonicalOrder& o, const DrawOptions& opt = {});

// Multi-line text report of the ledger.
std::string ledger_report(const DrawResult& r);

}  // namespace arcdiag::drawer
