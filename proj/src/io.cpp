#include "proprep/io.hpp"

#include <fstream>
#include <sstream>

namespace proprep {

namespace {

/// Line reader skipping blanks and '#' comments.
class Lines {
public:
    explicit Lines(std::istream& is) : is_(is) {}

    /// Next meaningful line; throws at end of stream.
    std::string next() {
        std::string line;
        while (std::getline(is_, line)) {
            ++lineno_;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            size_t b = line.find_last_not_of(" \t\r");
            return line.substr(a, b - a + 1);
        }
        throw Error(Error::Kind::parse, "unexpected end of file");
    }

    int lineno() const { return lineno_; }

private:
    std::istream& is_;
    int lineno_ = 0;
};

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] void parse_fail(const Lines& lines, const std::string& what) {
    throw Error(Error::Kind::parse,
                "line " + std::to_string(lines.lineno()) + ": " + what);
}

int parse_int(const Lines& lines, const std::string& tok) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        parse_fail(lines, "expected an integer, got '" + tok + "'");
    }
}

Rational parse_rational(const Lines& lines, const std::string& tok) {
    auto r = Rational::parse(tok);
    if (!r) parse_fail(lines, "expected a rational, got '" + tok + "'");
    return *r;
}

int expect_int_field(Lines& lines, const std::string& key) {
    auto toks = tokens_of(lines.next());
    if (toks.size() != 2 || toks[0] != key) parse_fail(lines, "expected '" + key + " <int>'");
    return parse_int(lines, toks[1]);
}

void expect_literal(Lines& lines, const std::string& want) {
    if (lines.next() != want) parse_fail(lines, "expected '" + want + "'");
}

}  // namespace

void write_election(std::ostream& os, const Instance& inst, const RankedProfile* profile) {
    os << "proprep-instance v1\n";
    os << "n " << inst.n << "\n";
    os << "m " << inst.m << "\n";
    os << "k " << inst.k << "\n";
    os << "metric " << (inst.full ? "full" : "block") << "\n";
    const int rows = inst.full ? inst.points() : inst.n;
    const int cols = inst.full ? inst.points() : inst.m;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c) os << ' ';
            os << inst.dist[static_cast<size_t>(r) * cols + c].str();
        }
        os << "\n";
    }
    if (profile) {
        os << "rankings\n";
        for (int v = 0; v < profile->n; ++v) {
            for (int t = 0; t < profile->m; ++t) {
                if (t) os << ' ';
                os << profile->order[v][t] + 1;
            }
            os << "\n";
        }
    }
    if (!inst.labels.empty()) {
        os << "labels\n";
        for (const auto& l : inst.labels) os << l << "\n";
    }
    os << "end\n";
}

ElectionFile read_election(std::istream& is) {
    Lines lines(is);
    expect_literal(lines, "proprep-instance v1");
    ElectionFile out;
    Instance& inst = out.instance;
    inst.n = expect_int_field(lines, "n");
    inst.m = expect_int_field(lines, "m");
    inst.k = expect_int_field(lines, "k");
    if (inst.n < 1 || inst.m < 1 || inst.k < 1)
        parse_fail(lines, "n, m, k must be positive");

    auto metric = tokens_of(lines.next());
    if (metric.size() != 2 || metric[0] != "metric" ||
        (metric[1] != "full" && metric[1] != "block"))
        parse_fail(lines, "expected 'metric full' or 'metric block'");
    inst.full = metric[1] == "full";

    const int rows = inst.full ? inst.points() : inst.n;
    const int cols = inst.full ? inst.points() : inst.m;
    inst.dist.reserve(static_cast<size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        auto toks = tokens_of(lines.next());
        if (static_cast<int>(toks.size()) != cols)
            parse_fail(lines, "metric row has wrong number of entries");
        for (const auto& tok : toks) inst.dist.push_back(parse_rational(lines, tok));
    }

    std::string section = lines.next();
    if (section == "rankings") {
        RankedProfile profile;
        profile.n = inst.n;
        profile.m = inst.m;
        profile.order.resize(inst.n);
        for (int v = 0; v < inst.n; ++v) {
            auto toks = tokens_of(lines.next());
            if (static_cast<int>(toks.size()) != inst.m)
                parse_fail(lines, "ranking row has wrong number of entries");
            for (const auto& tok : toks) {
                int c = parse_int(lines, tok);
                if (c < 1 || c > inst.m) parse_fail(lines, "candidate index out of range");
                profile.order[v].push_back(c - 1);
            }
        }
        profile.index();
        out.profile = std::move(profile);
        section = lines.next();
    }
    if (section == "labels") {
        for (int i = 0; i < inst.points(); ++i) inst.labels.push_back(lines.next());
        section = lines.next();
    }
    if (section != "end") parse_fail(lines, "expected 'end'");
    return out;
}

void write_committee(std::ostream& os, const std::vector<int>& committee) {
    os << "proprep-committee v1\n";
    os << "k " << committee.size() << "\n";
    os << "members";
    for (int c : committee) os << ' ' << c + 1;
    os << "\nend\n";
}

std::vector<int> read_committee(std::istream& is) {
    Lines lines(is);
    expect_literal(lines, "proprep-committee v1");
    int k = expect_int_field(lines, "k");
    auto toks = tokens_of(lines.next());
    if (toks.empty() || toks[0] != "members" || static_cast<int>(toks.size()) != k + 1)
        parse_fail(lines, "expected 'members' with k entries");
    std::vector<int> committee;
    for (size_t i = 1; i < toks.size(); ++i) committee.push_back(parse_int(lines, toks[i]) - 1);
    expect_literal(lines, "end");
    return committee;
}

void write_coverage(std::ostream& os, const CoverageRecord& rec) {
    os << "proprep-coverage v1\n";
    os << "kind " << (rec.kind == CoverageRecord::Kind::ear ? "ear" : "tgc") << "\n";
    os << "n " << rec.n << "\n";
    os << "m " << rec.m << "\n";
    os << "k " << rec.k << "\n";
    os << "p " << rec.p << "\n";
    for (const auto& seat : rec.seats) {
        if (seat.filler) {
            os << "filler " << seat.candidate + 1 << "\n";
            continue;
        }
        os << "seat " << seat.candidate + 1;
        if (rec.kind == CoverageRecord::Kind::ear)
            os << " tau " << seat.tau;
        else
            os << " delta " << seat.delta.str();
        os << " voters";
        for (int v : seat.voters) os << ' ' << v + 1;
        os << "\n";
    }
    os << "uncovered";
    for (int v : rec.uncovered) os << ' ' << v + 1;
    os << "\nend\n";
}

CoverageRecord read_coverage(std::istream& is) {
    Lines lines(is);
    expect_literal(lines, "proprep-coverage v1");
    CoverageRecord rec;
    auto kind = tokens_of(lines.next());
    if (kind.size() != 2 || kind[0] != "kind" || (kind[1] != "ear" && kind[1] != "tgc"))
        parse_fail(lines, "expected 'kind ear' or 'kind tgc'");
    rec.kind = kind[1] == "ear" ? CoverageRecord::Kind::ear : CoverageRecord::Kind::tgc;
    rec.n = expect_int_field(lines, "n");
    rec.m = expect_int_field(lines, "m");
    rec.k = expect_int_field(lines, "k");
    rec.p = expect_int_field(lines, "p");

    for (;;) {
        auto toks = tokens_of(lines.next());
        if (toks.empty()) continue;
        if (toks[0] == "seat") {
            CoverageRecord::Seat seat;
            if (toks.size() < 4) parse_fail(lines, "short seat line");
            seat.candidate = parse_int(lines, toks[1]) - 1;
            size_t at = 2;
            if (toks[at] == "tau") {
                seat.tau = parse_int(lines, toks[at + 1]);
                at += 2;
            } else if (toks[at] == "delta") {
                seat.delta = parse_rational(lines, toks[at + 1]);
                at += 2;
            } else {
                parse_fail(lines, "expected 'tau' or 'delta'");
            }
            if (at >= toks.size() || toks[at] != "voters")
                parse_fail(lines, "expected 'voters'");
            for (++at; at < toks.size(); ++at)
                seat.voters.push_back(parse_int(lines, toks[at]) - 1);
            rec.seats.push_back(std::move(seat));
        } else if (toks[0] == "filler") {
            if (toks.size() != 2) parse_fail(lines, "expected 'filler <candidate>'");
            CoverageRecord::Seat seat;
            seat.candidate = parse_int(lines, toks[1]) - 1;
            seat.filler = true;
            rec.seats.push_back(std::move(seat));
        } else if (toks[0] == "uncovered") {
            for (size_t i = 1; i < toks.size(); ++i)
                rec.uncovered.push_back(parse_int(lines, toks[i]) - 1);
            break;
        } else {
            parse_fail(lines, "unexpected line in coverage file");
        }
    }
    expect_literal(lines, "end");
    return rec;
}

namespace {

template <class Fn>
auto with_out_file(const std::string& path, Fn&& fn) {
    std::ofstream os(path);
    if (!os) throw Error(Error::Kind::io, "cannot write " + path);
    fn(os);
    if (!os) throw Error(Error::Kind::io, "write failed: " + path);
}

template <class Fn>
auto with_in_file(const std::string& path, Fn&& fn) {
    std::ifstream is(path);
    if (!is) throw Error(Error::Kind::io, "cannot read " + path);
    return fn(is);
}

}  // namespace

void write_election_file(const std::string& path, const Instance& inst,
                         const RankedProfile* profile) {
    with_out_file(path, [&](std::ostream& os) { write_election(os, inst, profile); });
}

ElectionFile read_election_file(const std::string& path) {
    return with_in_file(path, [](std::istream& is) { return read_election(is); });
}

void write_committee_file(const std::string& path, const std::vector<int>& committee) {
    with_out_file(path, [&](std::ostream& os) { write_committee(os, committee); });
}

std::vector<int> read_committee_file(const std::string& path) {
    return with_in_file(path, [](std::istream& is) { return read_committee(is); });
}

void write_coverage_file(const std::string& path, const CoverageRecord& rec) {
    with_out_file(path, [&](std::ostream& os) { write_coverage(os, rec); });
}

CoverageRecord read_coverage_file(const std::string& path) {
    return with_in_file(path, [](std::istream& is) { return read_coverage(is); });
}

void write_report(std::ostream& os, const AuditReport& report) {
    os << "proprep-audit v1\n";
    os << "check " << check_name(report.check) << "\n";
    os << "alpha " << report.alpha.str() << "\n";
    if (report.check == CheckKind::pr || report.check == CheckKind::pr_strong ||
        report.check == CheckKind::no_augmentation)
        os << "t-range " << report.t_lo << ".." << report.t_hi << "\n";
    os << "measured " << report.measured.str() << " ~ " << report.measured.decimal() << "\n";
    if (report.bound) {
        os << "bound " << report.bound->str() << " ~ " << report.bound->decimal() << "\n";
        os << "satisfied " << (*report.satisfied ? "yes" : "no") << "\n";
    }
    if (report.witness) {
        const Witness& w = *report.witness;
        if (!w.coalition.empty()) {
            os << "witness coalition";
            for (int v : w.coalition) os << ' ' << v + 1;
            os << "\n";
        }
        if (report.check == CheckKind::pr || report.check == CheckKind::pr_strong ||
            report.check == CheckKind::no_augmentation)
            os << "witness t " << w.t << "\n";
        if (!w.targets.empty()) {
            os << "witness targets";
            for (int c : w.targets) os << ' ' << c + 1;
            os << "\n";
        }
        if (w.voter >= 0) os << "witness voter " << w.voter + 1 << "\n";
    }
    if (report.monitor_ratio)
        os << "monitor measured/(n/k) " << report.monitor_ratio->str() << " ~ "
           << report.monitor_ratio->decimal() << "\n";
    if (report.zero_convention) os << "note zero-ratio-convention-applied\n";
    if (report.lower_bound_only) os << "note lower-bound-only-sampling\n";
    os << "end\n";
}

}  // namespace proprep
