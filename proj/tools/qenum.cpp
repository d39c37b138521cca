// qenum: exact enumerator toolkit for q-ary stabilizer codes.
//
// Subcommands: enumerate, transform, check-self-dual, express, verify-paper.
// Exit codes: 0 = success / property holds, 1 = property fails, 2 = bad input.

#include "qenum/corpus.hpp"
#include "qenum/errors.hpp"
#include "qenum/invariant.hpp"
#include "qenum/macwilliams.hpp"
#include "qenum/stabilizer.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qenum;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw input_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void deliver(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw input_error("cannot write file: " + out_path);
    out << text;
}

long checked_budget(long budget) {
    if (budget <= 0)
        throw input_error("budget must be positive");
    return budget;
}

Kind kind_from(const std::string& s) {
    if (s == "B") return Kind::B;
    if (s == "Bperp") return Kind::Bperp;
    if (s == "C") return Kind::C;
    if (s == "Cperp") return Kind::Cperp;
    if (s == "D") return Kind::D;
    return Kind::Dperp;
}

struct EnumerateOpts {
    std::string code_path;
    std::string kind = "all";
    std::string method = "oracle";
    long budget = kDefaultEnumBudget;
    std::string out_path;
};

int cmd_enumerate(const EnumerateOpts& o) {
    StabilizerCode code = StabilizerCode::parse(slurp(o.code_path));
    EnumeratorSet es;
    if (o.method == "oracle") {
        es = distributions_oracle(code, checked_budget(o.budget));
    } else if (o.method == "symplectic") {
        es = distributions_symplectic(code);
    } else {
        EnumeratorSet a = distributions_oracle(code, checked_budget(o.budget));
        EnumeratorSet b = distributions_symplectic(code);
        if (a != b) {
            std::cerr << "error: oracle and symplectic distributions disagree\n";
            return 1;
        }
        es = a;
    }
    std::ostringstream out;
    if (o.kind == "all") {
        static const std::pair<const char*, Kind> kinds[] = {
            {"B", Kind::B},       {"Bperp", Kind::Bperp}, {"C", Kind::C},
            {"Cperp", Kind::Cperp}, {"D", Kind::D},       {"Dperp", Kind::Dperp},
        };
        for (const auto& [label, k] : kinds)
            out << label << " = " << enumerator_poly(es, k).str() << "\n";
    } else {
        out << enumerator_poly(es, kind_from(o.kind)).str() << "\n";
    }
    deliver(out.str(), o.out_path);
    return 0;
}

struct TransformOpts {
    std::string kind;
    std::string poly_path;
    int q = 0;
    int n = 0;
    std::string K = "1";
    std::string out_path;
};

int cmd_transform(const TransformOpts& o) {
    if (o.n <= 0)
        throw input_error("n must be positive");
    Rational K = parse_rational(o.K);
    if (!(K > 0))
        throw input_error("K must be positive");
    TransformContext ctx{FieldSpec::make(o.q), o.n, K};
    MultiPoly result = MultiPoly::zero({"x"});
    if (o.kind == "mac1") {
        result = mac_B(parse_poly(slurp(o.poly_path), {"x", "y"}), ctx);
    } else if (o.kind == "mac2") {
        result = mac_C(parse_poly(slurp(o.poly_path), {"x", "y", "z", "w"}), ctx);
    } else {
        unsigned p = static_cast<unsigned>(ctx.spec->p());
        result = mac_D(parse_poly(slurp(o.poly_path), m_vars(o.q), p), ctx);
    }
    deliver(result.str() + "\n", o.out_path);
    return 0;
}

struct CheckOpts {
    std::string code_path;
    std::string out_path;
};

int cmd_check_self_dual(const CheckOpts& o) {
    StabilizerCode code = StabilizerCode::parse(slurp(o.code_path));
    EnumeratorSet es = distributions_symplectic(code);
    bool sd = check_formally_self_dual(es);
    std::ostringstream out;
    out << "formally-self-dual: " << (sd ? "true" : "false") << "\n";
    if (sd) {
        out << "witness: D = (1/K)*Dperp with K = " << rational_str(es.K) << "\n";
    } else {
        MultiPoly diff = enumerator_poly(es, Kind::D) -
                         enumerator_poly(es, Kind::Dperp) * (Rational(1) / es.K);
        MultiPoly lead(diff.vars());
        lead.add_term(diff.terms().rbegin()->first, diff.terms().rbegin()->second);
        out << "witness: D - (1/K)*Dperp contains " << lead.str()
            << " with K = " << rational_str(es.K) << "\n";
    }
    deliver(out.str(), o.out_path);
    return sd ? 0 : 1;
}

struct ExpressOpts {
    std::string poly_path;
    std::string case_name;
    int q = 0;
    unsigned max_degree = 8;
    std::string out_path;
};

int cmd_express(const ExpressOpts& o) {
    CaseId id;
    if (o.case_name == "weight") {
        id = CaseId::Weight;
    } else if (o.case_name == "double") {
        id = CaseId::Double;
    } else if (o.q == 2) {
        id = CaseId::CompleteQ2;
    } else if (o.q == 3) {
        id = CaseId::CompleteQ3;
    } else {
        throw input_error("the complete case is available for q = 2 and q = 3 only");
    }
    InvariantCase c = build_case(id, o.q);
    unsigned prime = id == CaseId::CompleteQ3 ? 3u : 2u;
    MultiPoly f = parse_poly(slurp(o.poly_path), c.vars, prime);
    GeneratorExpression ge = express_in_generators(f, c, o.max_degree);
    deliver(ge.str() + "\n", o.out_path);
    return 0;
}

struct VerifyOpts {
    std::vector<int> qs;
    int max_n = 3;
    long budget = kDefaultEnumBudget;
    std::string out_path;
};

struct Report {
    std::ostringstream out;
    int total = 0;
    int passed = 0;

    void section(const std::string& title) { out << title << "\n"; }
    void line(const std::string& name, bool pass) {
        ++total;
        if (pass) ++passed;
        out << "  " << (pass ? "PASS" : "FAIL") << " " << name << "\n";
    }
};

void report_case(Report& rep, const std::string& title, CaseId id, int q) {
    rep.section(title);
    for (const CheckResult& r : verify_case(build_case(id, q)))
        rep.line(r.name, r.pass);
}

void report_code(Report& rep, const CorpusEntry& entry, long budget) {
    rep.section("code " + entry.name);
    StabilizerCode code = corpus_code(entry.name);
    rep.line("K matches the stored value", code.K() == entry.K);

    EnumeratorSet es = distributions_symplectic(code);
    rep.line("oracle and symplectic distributions agree",
             distributions_oracle(code, budget) == es);

    TransformContext ctx{code.spec(), code.n(), es.K};
    rep.line("mac1 recovers B from Bperp",
             mac_B(enumerator_poly(es, Kind::Bperp), ctx) == enumerator_poly(es, Kind::B));
    rep.line("mac2 recovers C from Cperp",
             mac_C(enumerator_poly(es, Kind::Cperp), ctx) == enumerator_poly(es, Kind::C));
    rep.line("mac3 recovers D from Dperp",
             mac_D(enumerator_poly(es, Kind::Dperp), ctx) == enumerator_poly(es, Kind::D));

    bool sd = check_formally_self_dual(es);
    rep.line("self-dual flag matches the stored value", sd == entry.self_dual);
    if (!sd) return;

    const int q = code.spec()->q();
    bool b_ok = false;
    try {
        InvariantCase wc = build_case(CaseId::Weight, q);
        MultiPoly b = enumerator_poly(es, Kind::B);
        GeneratorExpression ge = express_in_generators(b, wc);
        b_ok = ge.evaluate(wc) == b;
    } catch (const error&) {
        b_ok = false;
    }
    rep.line("B expresses in the weight generators", b_ok);

    if (q == 2 || q == 3) {
        bool d_ok = false;
        try {
            InvariantCase cc = build_case(q == 2 ? CaseId::CompleteQ2 : CaseId::CompleteQ3);
            MultiPoly d = enumerator_poly(es, Kind::D);
            GeneratorExpression ge = express_in_generators(d, cc);
            d_ok = ge.evaluate(cc) == d;
        } catch (const error&) {
            d_ok = false;
        }
        rep.line("D expresses in the complete generators", d_ok);
    }
}

int cmd_verify_paper(const VerifyOpts& o) {
    if (o.max_n <= 0)
        throw input_error("max-n must be positive");
    std::vector<int> qs = o.qs;
    if (qs.empty()) qs = {2, 3};
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    long budget = checked_budget(o.budget);

    Report rep;
    for (int q : qs) {
        report_case(rep, "case weight(q=" + std::to_string(q) + ")", CaseId::Weight, q);
        report_case(rep, "case double(q=" + std::to_string(q) + ")", CaseId::Double, q);
        if (q == 2) report_case(rep, "case complete(q=2)", CaseId::CompleteQ2, 2);
        if (q == 3) report_case(rep, "case complete(q=3)", CaseId::CompleteQ3, 3);
    }
    for (const CorpusEntry& entry : corpus()) {
        StabilizerCode code = corpus_code(entry.name);
        if (std::find(qs.begin(), qs.end(), code.spec()->q()) == qs.end()) continue;
        if (code.n() > o.max_n) continue;
        report_code(rep, entry, budget);
    }
    rep.out << "summary: " << rep.total << " checks, " << rep.passed << " passed\n";
    deliver(rep.out.str(), o.out_path);
    return rep.passed == rep.total ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weight, double and complete enumerators of stabilizer codes"};
    app.require_subcommand(1);

    EnumerateOpts en;
    CLI::App* enumerate = app.add_subcommand("enumerate", "compute the six distributions of a code");
    enumerate->add_option("--code", en.code_path, "stabilizer code file")->required();
    enumerate->add_option("--kind", en.kind, "B|Bperp|C|Cperp|D|Dperp|all")
        ->check(CLI::IsMember({"B", "Bperp", "C", "Cperp", "D", "Dperp", "all"}));
    enumerate->add_option("--method", en.method, "oracle|symplectic|both")
        ->check(CLI::IsMember({"oracle", "symplectic", "both"}));
    enumerate->add_option("--budget", en.budget, "max q^(2n) for dense enumeration");
    enumerate->add_option("--out", en.out_path, "write output to this file");

    TransformOpts tr;
    CLI::App* transform = app.add_subcommand("transform", "apply a MacWilliams transform to a polynomial");
    transform->add_option("--kind", tr.kind, "mac1|mac2|mac3")
        ->required()
        ->check(CLI::IsMember({"mac1", "mac2", "mac3"}));
    transform->add_option("--poly", tr.poly_path, "polynomial file")->required();
    transform->add_option("--q", tr.q, "field size")->required();
    transform->add_option("--n", tr.n, "number of systems")->required();
    transform->add_option("--K", tr.K, "code dimension (rational)")->required();
    transform->add_option("--out", tr.out_path, "write output to this file");

    CheckOpts ch;
    CLI::App* check = app.add_subcommand("check-self-dual", "test formal self-duality of a code");
    check->add_option("--code", ch.code_path, "stabilizer code file")->required();
    check->add_option("--out", ch.out_path, "write output to this file");

    ExpressOpts ex;
    CLI::App* express = app.add_subcommand("express", "write an invariant in the case generators");
    express->add_option("--poly", ex.poly_path, "polynomial file")->required();
    express->add_option("--case", ex.case_name, "weight|double|complete")
        ->required()
        ->check(CLI::IsMember({"weight", "double", "complete"}));
    express->add_option("--q", ex.q, "field size")->required();
    express->add_option("--max-degree", ex.max_degree, "degree cap for the expression search");
    express->add_option("--out", ex.out_path, "write output to this file");

    VerifyOpts vp;
    CLI::App* verify = app.add_subcommand("verify-paper", "run every built-in identity and corpus check");
    verify->add_option("--q", vp.qs, "field sizes to verify (repeatable)");
    verify->add_option("--max-n", vp.max_n, "largest code length to include");
    verify->add_option("--budget", vp.budget, "max q^(2n) for dense enumeration");
    verify->add_option("--out", vp.out_path, "write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(en);
        if (transform->parsed()) return cmd_transform(tr);
        if (check->parsed()) return cmd_check_self_dual(ch);
        if (express->parsed()) return cmd_express(ex);
        return cmd_verify_paper(vp);
    } catch (const not_invariant_error&) {
        std::cerr << "error: not invariant under sigma\n";
        return 1;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
