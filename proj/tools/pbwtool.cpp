// pbwtool: decide PBW-ness of filtered deformations of graded algebras and
// inspect the homological data behind the verdict.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pbw/report.hpp"

namespace {

using namespace pbw;

struct Common {
    std::string file;
    int maxdeg = 0; // 0 = not given on the command line
    std::string out;
    bool text = false;
    std::string central; // empty = not given
};

void add_common(CLI::App* cmd, Common& c, bool with_central) {
    cmd->add_option("file", c.file, "presentation file")->required();
    cmd->add_option("--max-deg", c.maxdeg, "degree truncation (default 10)");
    cmd->add_option("--out", c.out, "write the report to a file instead of stdout");
    cmd->add_flag("--text", c.text, "human-readable rendering instead of JSON");
    if (with_central)
        cmd->add_option("--central", c.central, "name of the central variable (default z)");
}

int effective_maxdeg(const Common& c, const PresentationFile& pf) {
    if (c.maxdeg > 0)
        return c.maxdeg;
    if (pf.maxdeg)
        return *pf.maxdeg;
    return 10;
}

std::string effective_central(const Common& c, const PresentationFile& pf) {
    if (!c.central.empty())
        return c.central;
    if (pf.central)
        return *pf.central;
    return "z";
}

void emit(const Json& report, const Common& c) {
    std::string body = render_report(report, c.text);
    if (c.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(c.out);
        if (!f)
            throw Error("cannot write report to " + c.out);
        f << body;
    }
}

template <class Fn>
int with_field(const PresentationFile& pf, Fn&& fn) {
    if (pf.field_kind == PresentationFile::FieldKind::Q)
        return fn(RationalField{});
    return fn(PrimeField(pf.modulus));
}

template <class F>
GradedAlgebra<F> build_algebra(const PresentationFile& pf, const F& field, int bound,
                               bool require_minimal) {
    if (pf.is_deformation())
        throw Error(pf.filename + ": expected an algebra file (rel lines), found def lines");
    Alphabet alpha(pf.gens);
    auto rels = lower_polys(pf.rels, alpha, field, pf.filename);
    typename GradedAlgebra<F>::Options opts;
    opts.validate_minimal = require_minimal;
    if (!require_minimal) {
        auto red = redundant_relations(rels);
        for (size_t i : red)
            std::cerr << "warning: relation " << poly_str(rels[i], alpha)
                      << " is redundant; suggested pruning: drop it\n";
    }
    return GradedAlgebra<F>(field, alpha, std::move(rels), bound, opts);
}

template <class F>
Deformation<F> build_deformation(const PresentationFile& pf, const F& field, int bound) {
    if (!pf.is_deformation())
        throw Error(pf.filename + ": expected a deformation file (def lines)");
    Alphabet alpha(pf.gens);
    auto polys = lower_polys(pf.defs, alpha, field, pf.filename);
    Deformation<F> U(field, alpha, std::move(polys), bound);
    if (pf.base_path) {
        namespace fs = std::filesystem;
        fs::path base = *pf.base_path;
        if (base.is_relative())
            base = fs::path(pf.filename).parent_path() / base;
        auto bf = parse_presentation_file(base.string());
        if (bf.gens != pf.gens)
            throw Error("base algebra generators differ from the deformation's");
        auto brels = lower_polys(bf.rels, alpha, field, bf.filename);
        if (brels.size() != U.size())
            throw Error("base algebra relation count differs from the deformation's");
        for (size_t i = 0; i < brels.size(); ++i)
            if (!(U.relations()[i].top_component() == brels[i]))
                throw Error("top component of deformation relation " + std::to_string(i + 1) +
                            " does not match the declared base relation");
    }
    return U;
}

int run_hilbert(const Common& c) {
    auto pf = parse_presentation_file(c.file);
    int N = effective_maxdeg(c, pf);
    return with_field(pf, [&](auto field) {
        auto A = build_algebra(pf, field, N, /*require_minimal=*/false);
        Json j = report_header("hilbert", c.file, field.name(), N);
        j["dims"] = A.hilbert(N);
        emit(j, c);
        return 0;
    });
}

int run_resolution(const Common& c) {
    auto pf = parse_presentation_file(c.file);
    int N = effective_maxdeg(c, pf);
    return with_field(pf, [&](auto field) {
        auto A = build_algebra(pf, field, N, /*require_minimal=*/true);
        auto res = minimal_resolution(A, N);
        Json j = report_header("resolution", c.file, field.name(), N);
        j.update(resolution_json(res, A.alphabet()));
        j["complexity"] = complexity_json(complexity(res));
        emit(j, c);
        return 0;
    });
}

int run_complexity(const Common& c) {
    auto pf = parse_presentation_file(c.file);
    int N = effective_maxdeg(c, pf);
    return with_field(pf, [&](auto field) {
        auto A = build_algebra(pf, field, N, /*require_minimal=*/true);
        auto res = minimal_resolution(A, N);
        auto cx = complexity(res);
        Json j = report_header("complexity", c.file, field.name(), N);
        j["complexity"] = complexity_json(cx);
        Json b3 = Json::array();
        for (const auto& [key, v] : res.betti.b)
            if (key.first == 3 && v != 0) {
                Json e;
                e["j"] = key.second;
                e["dim"] = v;
                b3.push_back(e);
            }
        j["betti3"] = b3;
        emit(j, c);
        return 0;
    });
}

int run_central_ext(const Common& c, const std::string& export_path) {
    auto pf = parse_presentation_file(c.file);
    int N = effective_maxdeg(c, pf);
    return with_field(pf, [&](auto field) {
        using F = decltype(field);
        auto U = build_deformation(pf, field, N);
        CentralExtension<F> D(U, effective_central(c, pf), N);
        Json j = report_header("central-ext", c.file, field.name(), N);
        j["central"] = D.zname();
        Json rels = Json::array();
        std::vector<NCPoly<typename F::Scalar>> exported;
        for (const auto& hp : D.relations()) {
            rels.push_back(poly_str(hp.raw(), D.alphabet()));
            exported.push_back(hp.raw());
        }
        j["relations"] = rels;
        Json comms = Json::array();
        for (size_t i = 0; i + 1 < D.alphabet().size(); ++i) {
            NCPoly<typename F::Scalar> comm;
            comm.add_term(D.one(), Word{static_cast<Letter>(i), D.zvar()});
            comm.add_term(-D.one(), Word{D.zvar(), static_cast<Letter>(i)});
            comms.push_back(poly_str(comm, D.alphabet()));
            exported.push_back(std::move(comm));
        }
        j["commutators"] = comms;
        j["quotient_check"] = D.quotient_dim_check();
        j["dims_extension"] = D.as_algebra().hilbert(N);
        j["dims_base"] = U.base().hilbert(N);
        if (!export_path.empty()) {
            std::ofstream f(export_path);
            if (!f)
                throw Error("cannot write presentation to " + export_path);
            f << render_presentation(field.name(), D.alphabet(), exported, false);
        }
        emit(j, c);
        return 0;
    });
}

int run_regularity(const Common& c, int to_degree) {
    auto pf = parse_presentation_file(c.file);
    int N = effective_maxdeg(c, pf);
    return with_field(pf, [&](auto field) {
        using F = decltype(field);
        auto U = build_deformation(pf, field, N);
        CentralExtension<F> D(U, effective_central(c, pf), N);
        int p = to_degree;
        Json j = report_header("regularity", c.file, field.name(), N);
        if (p < 0) {
            auto res = minimal_resolution(U.base(), N);
            auto cx = complexity(res);
            p = std::min(cx.value, N - 1);
            j["complexity"] = complexity_json(cx);
        }
        auto r = regular_to_degree(D, p);
        j["regular_to"] = p;
        j["window"] = N;
        j["regular"] = r.regular;
        if (r.witness) {
            Json w;
            w["k"] = r.witness->k;
            w["n"] = r.witness->n;
            w["class"] = poly_str(r.witness->cls.raw(), D.alphabet());
            j["witness"] = w;
        }
        emit(j, c);
        return r.regular ? 0 : 1;
    });
}

int run_pbw_check(const Common& c, const std::string& method) {
    auto pf = parse_presentation_file(c.file);
    int N = effective_maxdeg(c, pf);
    PBWMethods methods{false, false, false, false};
    if (method == "all") {
        methods = PBWMethods{};
    } else if (method == "jacobi") {
        methods.jacobi = true;
    } else if (method == "regularity") {
        methods.regularity = true;
    } else if (method == "condition4") {
        methods.condition4 = true;
    } else if (method == "oracle") {
        methods.oracle = true;
    } else {
        throw Error("unknown method '" + method +
                    "' (expected jacobi|regularity|condition4|oracle|all)");
    }
    return with_field(pf, [&](auto field) {
        using F = decltype(field);
        auto U = build_deformation(pf, field, N);
        auto report = pbw_verdict<F>(U, N, methods, effective_central(c, pf));
        Json j = report_header("pbw-check", c.file, field.name(), N);
        j.update(pbw_report_json(report));
        emit(j, c);
        return report.verdict == "no" ? 1 : 0;
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"PBW-deformation checker for finitely presented graded algebras"};
    app.require_subcommand(1);

    Common c_hilbert, c_res, c_cx, c_ce, c_reg, c_pbw;
    std::string export_path, method = "all";
    int to_degree = -1;

    add_common(app.add_subcommand("hilbert", "graded dimensions of an algebra"), c_hilbert,
               false);
    add_common(app.add_subcommand("resolution",
                                  "minimal free resolution of K to homological degree 3"),
               c_res, false);
    add_common(app.add_subcommand("complexity", "the homological complexity bound"), c_cx, false);
    auto* ce = app.add_subcommand("central-ext", "build the central extension D");
    add_common(ce, c_ce, true);
    ce->add_option("--export", export_path, "write D as a presentation file");
    auto* reg = app.add_subcommand("regularity", "regularity of the central variable in D");
    add_common(reg, c_reg, true);
    reg->add_option("--to-degree", to_degree,
                    "check annihilators in degrees <= p (default: the complexity)");
    auto* pc = app.add_subcommand("pbw-check", "decide whether the deformation is PBW");
    add_common(pc, c_pbw, true);
    pc->add_option("--method", method, "jacobi|regularity|condition4|oracle|all (default all)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("hilbert"))
            return run_hilbert(c_hilbert);
        if (app.got_subcommand("resolution"))
            return run_resolution(c_res);
        if (app.got_subcommand("complexity"))
            return run_complexity(c_cx);
        if (app.got_subcommand("central-ext"))
            return run_central_ext(c_ce, export_path);
        if (app.got_subcommand("regularity"))
            return run_regularity(c_reg, to_degree);
        if (app.got_subcommand("pbw-check"))
            return run_pbw_check(c_pbw, method);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
