#include "scho/cli.hpp"

#include "scho/annihilators.hpp"
#include "scho/blocks.hpp"
#include "scho/central.hpp"
#include "scho/module.hpp"
#include "scho/pbw.hpp"
#include "scho/weyl.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <sstream>

namespace scho {

using nlohmann::json;

namespace {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational need_rational(const std::string& text, const std::string& flag) {
    auto r = parse_rational(text);
    if (!r) throw DomainError("flag " + flag + ": not a rational: '" + text + "'");
    return *r;
}

std::string element_in_basis(const QMatrix& col, std::size_t c,
                             const std::vector<std::string>& labels) {
    std::ostringstream os;
    bool leading = true;
    for (std::size_t r = 0; r < col.rows(); ++r) {
        Rational v = col.at(r, c);
        if (v == 0) continue;
        if (leading) {
            if (v < 0) {
                os << '-';
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        if (v != 1) os << to_string(v) << '*';
        os << labels[r];
        leading = false;
    }
    if (leading) os << '0';
    return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computer algebra for the Schrodinger algebra and its category O"};
    app.require_subcommand(1);
    bool json_errors = false;
    app.add_flag("--json-errors", json_errors, "machine-parsable errors on stderr");

    std::string expr, hw_s, charge_s = "0", a_s;
    int depth = 10, degree = 3, range = 4, kk = 0, sing_i = -1, findim_i = 0;
    bool verify = false, want_dot = false, want_simple = false, want_char = false,
         want_compare = false;

    auto* nf = app.add_subcommand("nf", "normal form of an expression");
    nf->add_option("expr", expr)->required();

    auto* cas = app.add_subcommand("casimir", "the Casimir element");
    cas->add_flag("--verify", verify, "check centrality instead of printing");

    auto* center = app.add_subcommand("center", "basis of the center up to a degree");
    center->add_option("--degree", degree)->required();

    auto* hc = app.add_subcommand("hc", "Harish-Chandra image of a weight-0 element");
    hc->add_option("expr", expr)->required();

    auto* verma_cmd = app.add_subcommand("verma", "truncated Verma module data");
    verma_cmd->add_option("--hw", hw_s)->required();
    verma_cmd->add_option("--charge", charge_s)->required();
    verma_cmd->add_option("--depth", depth);
    verma_cmd->add_flag("--character", want_char);
    verma_cmd->add_option("--singular", sing_i);
    verma_cmd->add_flag("--simple", want_simple);

    auto* block = app.add_subcommand("block", "block classification of a weight");
    block->add_option("--hw", hw_s)->required();
    block->add_option("--charge", charge_s)->required();
    block->add_flag("--dot", want_dot);

    auto* ext = app.add_subcommand("ext", "Ext^1 table between simples below a weight");
    ext->add_option("--hw", hw_s)->required();
    ext->add_option("--charge", charge_s)->required();
    ext->add_option("--depth", depth);
    ext->add_option("--range", range);

    auto* bgg = app.add_subcommand("bgg", "BGG reciprocity check (zero charge)");
    bgg->add_option("--hw", hw_s)->required();
    bgg->add_option("--charge", charge_s)->required();
    bgg->add_option("--k", kk)->required();
    bgg->add_option("--depth", depth);

    auto* findim = app.add_subcommand("findim", "graded projective table of the f.d. part");
    findim->add_option("--i", findim_i)->required();
    findim->add_option("--depth", depth);

    auto* weyl_cmd = app.add_subcommand("weyl", "Weyl realization tensor check");
    weyl_cmd->add_option("--charge", charge_s)->required();
    weyl_cmd->add_option("--a", a_s)->required();
    weyl_cmd->add_option("--depth", depth);

    auto* ann = app.add_subcommand("ann", "annihilator slice of a Verma module");
    ann->add_option("--hw", hw_s)->required();
    ann->add_option("--charge", charge_s)->required();
    ann->add_option("--degree", degree);
    ann->add_flag("--compare", want_compare);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (json_errors)
            err << json{{"error", e.what()}, {"kind", "parse"}}.dump() << '\n';
        else
            err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*nf) {
            auto u = parse_element(expr);
            if (!u) throw DomainError("cannot parse expression: '" + expr + "'");
            out << to_string(*u) << '\n';
            return 0;
        }
        if (*cas) {
            if (verify)
                out << "central: " << (verify_central(casimir()) ? "true" : "false") << '\n';
            else
                out << to_string(casimir()) << '\n';
            return 0;
        }
        if (*center) {
            std::vector<AlgebraElement> basis = center_basis(degree);
            json j = json::array();
            for (const auto& u : basis) j.push_back(to_string(u));
            out << j.dump() << '\n';
            return 0;
        }
        if (*hc) {
            auto u = parse_element(expr);
            if (!u) throw DomainError("cannot parse expression: '" + expr + "'");
            out << hc_homomorphism(*u).str() << '\n';
            return 0;
        }

        Weight lambda;
        if (*verma_cmd || *block || *ext || *bgg || *ann) {
            lambda = Weight(need_rational(hw_s, "--hw"), need_rational(charge_s, "--charge"));
        }

        if (*verma_cmd) {
            if (depth < 0) throw DomainError("--depth must be >= 0");
            if (sing_i >= 0) {
                TruncatedModule M = verma(lambda, depth);
                QMatrix sv = singular_vectors(M, sing_i);
                json j = json::array();
                for (std::size_t c = 0; c < sv.cols(); ++c)
                    j.push_back(element_in_basis(sv, c, M.labels[sing_i]));
                out << j.dump() << '\n';
            } else if (want_simple) {
                out << depth_vector_json(simple_character(lambda, depth)) << '\n';
            } else {
                TruncatedModule M = verma(lambda, depth);
                out << depth_vector_json(M.dims) << '\n';
            }
            return 0;
        }
        if (*block) {
            BlockDescriptor d = classify(lambda);
            if (want_dot)
                out << d.quiver.dot();
            else
                out << d.json() << '\n';
            return 0;
        }
        if (*ext) {
            json j;
            for (int i = 0; i <= range; ++i)
                for (int jj2 = 0; jj2 <= range; ++jj2)
                    j[std::to_string(i) + "," + std::to_string(jj2)] =
                        ext1(lambda, i, jj2, depth);
            out << j.dump() << '\n';
            return 0;
        }
        if (*bgg) {
            out << json{{"bgg", bgg_check(lambda, kk, depth)}}.dump() << '\n';
            return 0;
        }
        if (*findim) {
            out << findim_projective(findim_i, depth).json() << '\n';
            return 0;
        }
        if (*weyl_cmd) {
            Rational zdot = need_rational(charge_s, "--charge");
            Rational a = need_rational(a_s, "--a");
            if (depth < 0) throw DomainError("--depth must be >= 0");
            TruncatedModule T = tensor_with_m(a, depth, zdot);
            TruncatedModule V = verma(T.highest, depth);
            bool match = T.dims == V.dims;
            HomResult homs = module_hom(V, T);
            json j;
            j["highest"] = {{"hw", to_string(T.highest.h_val)},
                            {"charge", to_string(T.highest.z_val)}};
            j["character"] = T.dims;
            j["verma_character"] = V.dims;
            j["characters_match"] = match;
            j["intertwiner_dim"] = homs.dim;
            out << j.dump() << '\n';
            return 0;
        }
        if (*ann) {
            if (want_compare) {
                out << json{{"verdict", verdict_name(compare_slices(lambda, degree))}}.dump()
                    << '\n';
            } else {
                FilteredIdealSlice s = annihilator_slice(lambda, degree);
                json j;
                j["dim"] = s.dim();
                j["basis"] = json::array();
                for (const auto& u : s.elements()) j["basis"].push_back(to_string(u));
                out << j.dump() << '\n';
            }
            return 0;
        }
    } catch (const DomainError& e) {
        if (json_errors)
            err << json{{"error", e.what()}, {"kind", "domain"}}.dump() << '\n';
        else
            err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        if (json_errors)
            err << json{{"error", e.what()}, {"kind", "domain"}}.dump() << '\n';
        else
            err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace scho
