// Command-line front end: parse kgraph documents, run the K-theory pipeline,
// emit text or JSON. Exit codes: 0 success, 1 invalid input (parse or
// validation failure), 2 unsupported request for otherwise valid input.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kgk/kgk.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid_input = 1;
constexpr int exit_unsupported = 2;

struct output_options {
    std::string format = "text";

    bool json() const { return format == "json"; }
};

void emit(const output_options& out, const std::string& text, const kgk::json& j) {
    if (out.json())
        std::cout << kgk::dump_document(j);
    else
        std::cout << text;
}

int fail(const output_options& out, int code, const std::string& kind,
         const std::string& message) {
    std::cerr << "error: " << message << "\n";
    if (out.json()) {
        kgk::json j;
        j["error"] = {{"kind", kind}, {"message", message}, {"exit_code", code}};
        std::cout << kgk::dump_document(j);
    }
    return code;
}

// Analysis commands accept either document kind; skeletons are first turned
// into their vertex matrices.
kgk::vertex_matrix_family load_family(const std::string& path) {
    kgk::json j = kgk::load_document(path);
    if (j.is_object() && j.contains("format") && j["format"] == kgk::skeleton_format)
        return kgk::matrices_from_skeleton(kgk::skeleton_from_json(j));
    return kgk::family_from_json(j);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw kgk::parse_error("cannot write output file '" + path + "'");
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "K-theory invariants of higher-rank graph C*-algebras from commuting "
        "vertex matrices"};
    app.require_subcommand(1);
    output_options out;

    std::string in_path, in_path_b, group_path, labelling_path, out_prefix;
    std::vector<std::string> factor_paths;
    bool flag_simple = false, flag_purely_infinite = false;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", out.format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* c_validate =
        app.add_subcommand("validate", "check the necessary k-graph conditions");
    c_validate->add_option("input", in_path)->required();
    add_output(c_validate);

    CLI::App* c_kgroups = app.add_subcommand("kgroups", "K-group report");
    c_kgroups->add_option("input", in_path)->required();
    add_output(c_kgroups);

    CLI::App* c_e2 = app.add_subcommand("e2", "E2 page (homology of the complex)");
    c_e2->add_option("input", in_path)->required();
    add_output(c_e2);

    CLI::App* c_unit =
        app.add_subcommand("unit-class", "position of the unit class in K0 (k = 2)");
    c_unit->add_option("input", in_path)->required();
    add_output(c_unit);

    CLI::App* c_cross = app.add_subcommand(
        "crosscheck", "independent rank/torsion checks (k = 2) or the unital "
                      "free-rank check (k = 3)");
    c_cross->add_option("input", in_path)->required();
    add_output(c_cross);

    CLI::App* c_compare = app.add_subcommand("compare", "compare two families");
    c_compare->add_option("a", in_path)->required();
    c_compare->add_option("b", in_path_b)->required();
    c_compare->add_flag("--simple", flag_simple, "assert both algebras are simple");
    c_compare->add_flag("--purely-infinite", flag_purely_infinite,
                        "assert both algebras are purely infinite");
    add_output(c_compare);

    CLI::App* c_prod = app.add_subcommand(
        "construct-product", "product of rank-1 skeletons; writes <prefix>.skeleton.json "
                             "and <prefix>.matrices.json");
    c_prod->add_option("factors", factor_paths)->required()->expected(-1);
    c_prod->add_option("--out-prefix", out_prefix)->required();
    add_output(c_prod);

    CLI::App* c_skew = app.add_subcommand(
        "construct-skew", "skew product by a finite abelian group; writes "
                          "<prefix>.skeleton.json and <prefix>.matrices.json");
    c_skew->add_option("input", in_path)->required();
    c_skew->add_option("--group", group_path)->required();
    c_skew->add_option("--labelling", labelling_path,
                       "edge-id -> residues map (default: inline labels)");
    c_skew->add_option("--out-prefix", out_prefix)->required();
    add_output(c_skew);

    CLI::App* c_snf = app.add_subcommand("snf", "Smith normal form of a matrix");
    c_snf->add_option("input", in_path)->required();
    add_output(c_snf);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_validate->parsed()) {
            kgk::vertex_matrix_family f;
            kgk::json j = kgk::load_document(in_path);
            if (j.is_object() && j.contains("format") &&
                j["format"] == kgk::skeleton_format) {
                // family validation failures surface through the derivation
                try {
                    f = kgk::matrices_from_skeleton(kgk::skeleton_from_json(j));
                } catch (const kgk::invalid_family_error& e) {
                    emit(out, kgk::render_validation(e.report),
                         kgk::validation_to_json(e.report));
                    std::cerr << "error: " << e.what() << "\n";
                    return exit_invalid_input;
                }
            } else {
                f = kgk::family_from_json(j);
            }
            kgk::validation_report rep = kgk::validate_family(f);
            emit(out, kgk::render_validation(rep), kgk::validation_to_json(rep));
            if (!rep.ok) {
                std::cerr << "error: family fails validation\n";
                return exit_invalid_input;
            }
            return exit_ok;
        }
        if (c_kgroups->parsed()) {
            auto rep = kgk::kgroups(load_family(in_path));
            emit(out, kgk::render_report(rep), kgk::report_to_json(rep));
            return exit_ok;
        }
        if (c_e2->parsed()) {
            auto f = load_family(in_path);
            auto page = kgk::compute_e2_page(f);
            emit(out, kgk::render_e2(page), kgk::e2_to_json(f.k, page));
            return exit_ok;
        }
        if (c_unit->parsed()) {
            auto f = load_family(in_path);
            auto u = kgk::unit_class(f);
            auto rep = kgk::kgroups(f);
            emit(out, kgk::render_unit_class(u, *rep.k0),
                 kgk::unit_class_to_json(u, *rep.k0));
            return exit_ok;
        }
        if (c_cross->parsed()) {
            auto f = load_family(in_path);
            if (f.k == 2) {
                auto res = kgk::rank_torsion_crosscheck(f);
                emit(out, kgk::render_crosscheck(res), kgk::crosscheck_to_json(res));
            } else if (f.k == 3) {
                auto res = kgk::k3_unital_rank_check(f);
                emit(out, kgk::render_k3_check(res), kgk::k3_check_to_json(res));
            } else {
                throw kgk::unsupported_error("crosscheck requires k = 2 or k = 3, got k = " +
                                             std::to_string(f.k));
            }
            return exit_ok;
        }
        if (c_compare->parsed()) {
            auto a = load_family(in_path);
            auto b = load_family(in_path_b);
            auto rep = kgk::compare(a, b, flag_simple, flag_purely_infinite);
            emit(out, kgk::render_comparison(rep), kgk::comparison_to_json(rep));
            return exit_ok;
        }
        if (c_prod->parsed()) {
            std::vector<kgk::skeleton_graph> factors;
            for (const auto& p : factor_paths)
                factors.push_back(kgk::skeleton_from_json(kgk::load_document(p)));
            kgk::skeleton_graph prod = kgk::product(factors);
            kgk::vertex_matrix_family fam = kgk::matrices_from_skeleton(prod);
            write_file(out_prefix + ".skeleton.json",
                       kgk::dump_document(kgk::skeleton_to_json(prod)));
            write_file(out_prefix + ".matrices.json",
                       kgk::dump_document(kgk::family_to_json(fam)));
            emit(out,
                 "wrote " + out_prefix + ".skeleton.json and " + out_prefix +
                     ".matrices.json\n",
                 kgk::json{{"skeleton", out_prefix + ".skeleton.json"},
                           {"matrices", out_prefix + ".matrices.json"}});
            return exit_ok;
        }
        if (c_skew->parsed()) {
            auto g = kgk::skeleton_from_json(kgk::load_document(in_path));
            auto group = kgk::group_from_json(kgk::load_document(group_path));
            kgk::edge_labelling lab =
                labelling_path.empty()
                    ? kgk::inline_labelling(g)
                    : kgk::labelling_from_json(kgk::load_document(labelling_path));
            kgk::skeleton_graph sk = kgk::skew_product(g, group, lab);
            kgk::vertex_matrix_family fam = kgk::matrices_from_skeleton(sk);
            write_file(out_prefix + ".skeleton.json",
                       kgk::dump_document(kgk::skeleton_to_json(sk)));
            write_file(out_prefix + ".matrices.json",
                       kgk::dump_document(kgk::family_to_json(fam)));
            emit(out,
                 "wrote " + out_prefix + ".skeleton.json and " + out_prefix +
                     ".matrices.json\n",
                 kgk::json{{"skeleton", out_prefix + ".skeleton.json"},
                           {"matrices", out_prefix + ".matrices.json"}});
            return exit_ok;
        }
        if (c_snf->parsed()) {
            auto a = kgk::matrix_from_json(kgk::load_document(in_path));
            auto d = kgk::smith_normal_form(a);
            emit(out, kgk::render_smith(d), kgk::smith_to_json(d));
            return exit_ok;
        }
    } catch (const kgk::unsupported_error& e) {
        return fail(out, exit_unsupported, "unsupported", e.what());
    } catch (const kgk::invalid_family_error& e) {
        return fail(out, exit_invalid_input, "invalid_family", e.what());
    } catch (const kgk::parse_error& e) {
        return fail(out, exit_invalid_input, "parse", e.what());
    } catch (const kgk::label_error& e) {
        return fail(out, exit_invalid_input, "labelling", e.what());
    } catch (const kgk::subgroup_error& e) {
        return fail(out, exit_invalid_input, "subgroup", e.what());
    } catch (const std::exception& e) {
        return fail(out, exit_invalid_input, "internal", e.what());
    }
    return exit_ok;
}
