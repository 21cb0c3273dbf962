// Command-line front end: one subcommand per library operation, JSON
// envelopes on stdout (CSV for `table`), exit 0/1/2 for ok / internal
// cross-check failure / usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "monodromy/errors.hpp"
#include "monodromy/hermitian.hpp"
#include "monodromy/json_io.hpp"
#include "monodromy/reflection_group.hpp"
#include "monodromy/sweep.hpp"
#include "monodromy/vanishing.hpp"

namespace {

using monodromy::Json;

Json read_json_input(const std::string& path) {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return Json::parse(in);
}

void print_envelope(const std::string& command, Json params, Json result,
                    std::vector<std::string> provenance) {
    std::cout << monodromy::envelope(command, std::move(params), std::move(result),
                                     std::move(provenance))
                     .dump(2)
              << "\n";
}

std::pair<int, int> parse_signature(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("signature must be \"p,q\"");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of hypersurface monodromy: Hodge numbers, vanishing-cycle "
                 "calculus, reflection-group probes, and the large-kernel classification"};
    app.require_subcommand(1);

    int d = 0, n = 0, k = 0, i = 1, dmax = 0, nvars = 0, two_d = 0, cap = 20000;
    int lambda_order = 0, d_max = 0, n_max = 0, count_k = 0;
    std::string format = "json", input = "-", h12_text = "0", signature_text = "1,1";
    bool use_parallel = false;

    auto* c_betti = app.add_subcommand("betti", "primitive middle Betti number");
    c_betti->add_option("--d", d)->required();
    c_betti->add_option("--n", n)->required();
    c_betti->callback([&] {
        print_envelope("betti", Json{{"d", d}, {"n", n}}, Json{{"value", monodromy::primitive_betti(d, n)}},
                       {"betti:recursion", "betti:closed-form"});
    });

    auto* c_euler = app.add_subcommand("euler", "Euler characteristic");
    c_euler->add_option("--d", d)->required();
    c_euler->add_option("--n", n)->required();
    c_euler->callback([&] {
        print_envelope("euler", Json{{"d", d}, {"n", n}},
                       Json{{"value", monodromy::euler_characteristic(d, n)}}, {"euler:cover-recursion"});
    });

    auto* c_hodge = app.add_subcommand("hodge", "primitive Hodge numbers of a hypersurface");
    c_hodge->add_option("--d", d)->required();
    c_hodge->add_option("--n", n)->required();
    c_hodge->callback([&] {
        print_envelope("hodge", Json{{"d", d}, {"n", n}}, monodromy::to_json(monodromy::hodge_hypersurface(d, n)),
                       {"hodge:jacobian-ring-dimensions"});
    });

    auto* c_cover = app.add_subcommand("hodge-cover", "eigenspace Hodge numbers of a cyclic cover");
    c_cover->add_option("--d", d)->required();
    c_cover->add_option("--n", n)->required();
    c_cover->add_option("--k", k)->required();
    c_cover->add_option("--i", i)->required();
    c_cover->callback([&] {
        print_envelope("hodge-cover", Json{{"d", d}, {"n", n}, {"k", k}, {"i", i}},
                       monodromy::to_json(monodromy::hodge_cyclic_eigenspace({d, n, k, i})),
                       {"hodge:eigenspace-residue-degrees"});
    });

    auto* c_sig = app.add_subcommand("signature", "signature of the primitive cup product (n even)");
    c_sig->add_option("--d", d)->required();
    c_sig->add_option("--n", n)->required();
    c_sig->callback([&] {
        const auto [r, s] = monodromy::signature_primitive(d, n);
        print_envelope("signature", Json{{"d", d}, {"n", n}}, Json{{"r", r}, {"s", s}},
                       {"signature:hodge-parity-sums"});
    });

    auto* c_esig = app.add_subcommand("eigensig", "hermitian signature of a non-real cover eigenspace");
    c_esig->add_option("--d", d)->required();
    c_esig->add_option("--n", n)->required();
    c_esig->add_option("--k", k)->required();
    c_esig->add_option("--i", i)->required();
    c_esig->callback([&] {
        const auto [p, q] = monodromy::eigenspace_signature({d, n, k, i});
        print_envelope("eigensig", Json{{"d", d}, {"n", n}, {"k", k}, {"i", i}}, Json{{"p", p}, {"q", q}},
                       {"signature:eigenspace-parity-sums"});
    });

    auto* c_rank = app.add_subcommand("rank", "real and complex rank of the natural monodromy target");
    c_rank->add_option("--d", d)->required();
    c_rank->add_option("--n", n)->required();
    c_rank->callback([&] {
        print_envelope("rank", Json{{"d", d}, {"n", n}},
                       Json{{"real", monodromy::rank_real(d, n)}, {"complex", monodromy::rank_complex(d, n)}},
                       {"rank:betti-halving", "rank:signature-min"});
    });

    auto* c_lattice = app.add_subcommand("lattice-count", "bounded lattice points on a diagonal slice");
    c_lattice->add_option("--dmax", dmax)->required();
    c_lattice->add_option("--nvars", nvars)->required();
    c_lattice->add_option("--k", count_k)->required();
    c_lattice->callback([&] {
        print_envelope("lattice-count", Json{{"dmax", dmax}, {"nvars", nvars}, {"k", count_k}},
                       Json{{"value", monodromy::lattice_count(dmax, nvars, count_k)}},
                       {"lattice:convolution-recursion"});
    });

    auto* c_susp = app.add_subcommand("suspend-check", "double-suspension Hodge shift equality");
    c_susp->add_option("--two-d", two_d)->required();
    c_susp->add_option("--n", n)->required();
    c_susp->callback([&] {
        print_envelope("suspend-check", Json{{"two_d", two_d}, {"n", n}},
                       Json{{"holds", monodromy::suspension_periodicity_check(two_d, n)}},
                       {"suspension:weighted-degree-bookkeeping"});
    });

    auto* c_reflect = app.add_subcommand("reflect", "apply a complex reflection to a vector (JSON input)");
    c_reflect->add_option("--input", input, "JSON file, or - for stdin");
    c_reflect->callback([&] {
        const Json in = read_json_input(input);
        monodromy::ComplexReflection r;
        r.lambda = monodromy::cyclotomic_from_json(in.at("lambda"));
        r.delta = monodromy::vector_from_json(in.at("delta"));
        r.epsilon = in.value("epsilon", 1);
        r.form = monodromy::hermitian_form(monodromy::matrix_from_json(in.at("gram")));
        const auto x = monodromy::vector_from_json(in.at("x"));
        const monodromy::Matrix t = monodromy::reflection_matrix(r);
        print_envelope("reflect", Json{{"input", input}},
                       Json{{"matrix", monodromy::to_json(t)}, {"image", monodromy::to_json(monodromy::apply(t, x))}},
                       {"reflection:unit-root-formula"});
    });

    auto* c_nodal = app.add_subcommand("nodal", "local monodromy of a nodal degeneration of a cyclic cover");
    c_nodal->add_option("--k", k)->required();
    c_nodal->add_option("--n", n)->required();
    c_nodal->callback([&] {
        const auto nm = monodromy::nodal_monodromy(k, n);
        Json pairs = Json::array();
        for (const auto& ep : nm.eigenpairs) {
            Json pj{{"lambda", monodromy::to_json(ep.lambda)},
                    {"vector", monodromy::to_json(ep.vector)},
                    {"h_value", monodromy::to_json(ep.h_value)}};
            if (ep.epsilon) pj["epsilon"] = *ep.epsilon;
            pairs.push_back(pj);
        }
        print_envelope("nodal", Json{{"k", k}, {"n", n}},
                       Json{{"matrix", monodromy::to_json(nm.matrix)}, {"order", nm.order}, {"eigenpairs", pairs}},
                       {"monodromy:cycle-shift-tensor-sign", "monodromy:exact-eigen-decomposition"});
    });

    auto* c_join = app.add_subcommand("join", "tensor product of two local monodromies (JSON input)");
    c_join->add_option("--input", input, "JSON file with lhs and rhs matrices, or - for stdin");
    c_join->callback([&] {
        const Json in = read_json_input(input);
        const monodromy::Matrix lhs = monodromy::matrix_from_json(in.at("lhs"));
        const monodromy::Matrix rhs = monodromy::matrix_from_json(in.at("rhs"));
        print_envelope("join", Json{{"input", input}},
                       Json{{"matrix", monodromy::to_json(monodromy::join_monodromy(lhs, rhs))}},
                       {"monodromy:kronecker-product"});
    });

    auto* c_susplat = app.add_subcommand("suspend-lattice", "suspension of an intersection lattice (JSON input)");
    c_susplat->add_option("--input", input, "JSON file with the lattice, or - for stdin");
    c_susplat->callback([&] {
        const auto lat = monodromy::lattice_from_json(read_json_input(input));
        print_envelope("suspend-lattice", Json{{"input", input}},
                       monodromy::to_json(monodromy::suspend_lattice(lat)), {"lattice:suspension-sign-rule"});
    });

    auto* c_closure = app.add_subcommand("group-closure", "enumerate the group generated by unitary matrices");
    c_closure->add_option("--input", input, "JSON file with gram and generators, or - for stdin");
    c_closure->add_option("--cap", cap, "element cap before reporting growth");
    c_closure->callback([&] {
        const Json in = read_json_input(input);
        monodromy::GeneratedGroup g;
        g.form = monodromy::hermitian_form(monodromy::matrix_from_json(in.at("gram")));
        for (const auto& gen : in.at("generators")) g.generators.push_back(monodromy::matrix_from_json(gen));
        g.cap = cap;
        const auto res = monodromy::group_closure(g);
        Json result{{"status", res.finite ? "finite" : "exceeds_cap"}, {"cap", cap}};
        result[res.finite ? "order" : "elements_found"] = res.count;
        print_envelope("group-closure", Json{{"input", input}, {"cap", cap}}, result,
                       {"group:bfs-closure-canonical-hashing"});
    });

    auto* c_dich = app.add_subcommand("dichotomy", "two-reflection finite-or-growth probe");
    c_dich->add_option("--lambda-order", lambda_order, "reflection eigenvalue is the primitive root of this order")->required();
    c_dich->add_option("--h12", h12_text, "inner product h(d1,d2), rational");
    c_dich->add_option("--signature", signature_text, "target signature, \"p,q\"");
    c_dich->add_option("--cap", cap);
    c_dich->callback([&] {
        const auto sig = parse_signature(signature_text);
        const monodromy::Cyclotomic h12{monodromy::rational_from_string(h12_text)};
        const auto res = monodromy::dichotomy_probe(lambda_order, h12, sig, cap);
        Json result{{"outcome", res.finite ? "FiniteWitness" : "GrowthEvidence"}, {"cap", cap}};
        result[res.finite ? "order" : "elements_found"] = res.count;
        print_envelope("dichotomy",
                       Json{{"lambda_order", lambda_order}, {"h12", h12_text}, {"signature", signature_text}, {"cap", cap}},
                       result, {"group:bfs-closure-canonical-hashing", "form:congruence-signature"});
    });

    auto* c_classify = app.add_subcommand("classify", "large-kernel decision for one (d, n)");
    c_classify->add_option("--d", d)->required();
    c_classify->add_option("--n", n)->required();
    c_classify->add_option("--format", format)->check(CLI::IsMember({"json"}));
    c_classify->callback([&] {
        print_envelope("classify", Json{{"d", d}, {"n", n}}, monodromy::to_json(monodromy::classify(d, n)),
                       {"classify:decision-tree", "hodge:jacobian-ring-dimensions", "group:lie-type-assembly"});
    });

    auto* c_table = app.add_subcommand("table", "classification sweep over a (d, n) grid");
    c_table->add_option("--d-max", d_max)->required();
    c_table->add_option("--n-max", n_max)->required();
    c_table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    c_table->add_flag("--parallel", use_parallel, "compute rows with the OpenMP kernel");
    c_table->callback([&] {
        const auto rows = monodromy::classification_table(
            d_max, n_max, use_parallel ? monodromy::ExecPolicy::Parallel : monodromy::ExecPolicy::Serial);
        if (format == "csv") {
            std::cout << monodromy::table_csv(rows);
            return;
        }
        Json jrows = Json::array();
        for (const auto& rec : rows) jrows.push_back(monodromy::to_json(rec));
        print_envelope("table", Json{{"d_max", d_max}, {"n_max", n_max}}, Json{{"rows", jrows}},
                       {"classify:decision-tree"});
    });

    auto* c_prod = app.add_subcommand("product-obstruction", "abelianization bound against a product splitting");
    c_prod->add_option("--d", d)->required();
    c_prod->add_option("--k", k)->required();
    c_prod->callback([&] {
        print_envelope("product-obstruction", Json{{"d", d}, {"k", k}},
                       Json{{"holds", monodromy::product_obstruction(d, k)},
                            {"max_element_order", 2 * k},
                            {"discriminant_degree", monodromy::discriminant_degree(d, 2)}},
                       {"abelianization:discriminant-degree-bound"});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const monodromy::InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
