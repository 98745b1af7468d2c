// gkf: relative cohomology of formal Hamiltonian vector fields by weight.

#include "gkf/characters.hpp"
#include "gkf/driver.hpp"
#include "gkf/sp_invariants.hpp"
#include "gkf/weight_combinatorics.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct Common {
    int n = 2;
    std::string format = "text";
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--n", c.n, "half dimension of the symplectic space")->check(CLI::IsMember({1, 2}));
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

gkf::IrrepLabel parse_label(const std::string& s, int n)
{
    auto l = gkf::IrrepLabel::parse(s);
    if (n == 1 && l.q != 0) throw std::invalid_argument("n = 1 labels have a single part: " + s);
    return l;
}

void print_decomposition(const gkf::Decomposition& d, int n, const Common& c, const std::string& what)
{
    if (c.format == "json") {
        nlohmann::json j;
        j["n"] = n;
        j["of"] = what;
        j["decomposition"] = gkf::decomposition_json(d);
        j["dimension"] = gkf::total_dimension(d, n);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << what << " = " << gkf::format_decomposition(d) << '\n';
        std::cout << "dimension " << gkf::total_dimension(d, n) << '\n';
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"relative Gel'fand-Kalinin-Fuks cohomology of formal Hamiltonian vector fields"};
    app.require_subcommand(1);

    // cohomology
    Common coh_c;
    int coh_w = 2;
    int min_gen = 3;
    bool heavy = false;
    bool strict = false;
    bool quiet = false;
    std::optional<std::string> cache;
    std::optional<std::string> emit;
    auto* coh = app.add_subcommand("cohomology", "dimensions and Betti numbers of the relative complex");
    add_common(coh, coh_c);
    coh->add_option("--weight", coh_w, "weight w")->required()->check(CLI::NonNegativeNumber);
    coh->add_option("--min-gen", min_gen, "smallest generator degree used when splitting d")
        ->check(CLI::IsMember({2, 3}));
    coh->add_flag("--heavy", heavy, "accepted for compatibility; every degree is always computed");
    coh->add_flag("--strict", strict, "reject odd weights instead of reporting the zero complex");
    coh->add_flag("--quiet", quiet, "no progress lines on stderr");
    coh->add_option("--cache", cache, "directory for cached invariant bases (overrides GKF_CACHE)");
    coh->add_option("--emit-bases", emit, "write invariant bases and restricted d matrices here");

    // slice-dims
    Common sd_c;
    int sd_w = 2;
    int sd_min_gen = 3;
    auto* sd = app.add_subcommand("slice-dims", "dimensions of the cochain slices C^m|_w");
    add_common(sd, sd_c);
    sd->add_option("--weight", sd_w, "weight w")->required()->check(CLI::NonNegativeNumber);
    sd->add_option("--min-gen", sd_min_gen, "smallest generator degree")->check(CLI::IsMember({2, 3}));

    // decompose
    Common dec_c;
    int dec_w = 2;
    int dec_m = 2;
    std::string dec_shape;
    std::string dec_method = "weights";
    auto* dec = app.add_subcommand("decompose", "irreducible decomposition of a slice or of one shape");
    add_common(dec, dec_c);
    dec->add_option("--weight", dec_w, "weight w");
    dec->add_option("--degree", dec_m, "cochain degree m");
    dec->add_option("--shape", dec_shape, "single shape, e.g. 3:2,4:1 for Lambda^2 S_3 (x) S_4");
    dec->add_option("--method", dec_method, "highest-weight vectors or character peeling")
        ->check(CLI::IsMember({"weights", "character"}));

    // decompose-exterior
    Common ext_c;
    int ext_q = 3;
    int ext_k = 2;
    auto* ext = app.add_subcommand("decompose-exterior", "character decomposition of Lambda^k S_q");
    add_common(ext, ext_c);
    ext->add_option("--q", ext_q, "polynomial degree q")->check(CLI::PositiveNumber);
    ext->add_option("--k", ext_k, "exterior power k")->check(CLI::NonNegativeNumber);

    // tensor
    Common ten_c;
    std::string ten_a, ten_b;
    std::string ten_method = "both";
    auto* ten = app.add_subcommand("tensor", "decompose V_lambda (x) V_mu");
    add_common(ten, ten_c);
    ten->add_option("lambda", ten_a, "first label, e.g. 3,1")->required();
    ten->add_option("mu", ten_b, "second label, e.g. 4,0")->required();
    ten->add_option("--method", ten_method, "klimyk, lr (stable product with modification) or both")
        ->check(CLI::IsMember({"klimyk", "lr", "both"}));

    // dim
    Common dim_c;
    std::vector<std::string> dim_labels;
    auto* dim = app.add_subcommand("dim", "Weyl dimension of irreducibles");
    add_common(dim, dim_c);
    dim->add_option("labels", dim_labels, "labels such as 5,1")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*coh) {
            if (coh_w >= 8) std::cerr << gkf::unvalidated_banner(coh_w) << '\n';
            if (coh_w % 2 != 0 && strict) {
                std::cerr << "error: odd weight " << coh_w << " (the relative complex is zero)\n";
                return 2;
            }
            gkf::BuildOptions opt;
            opt.min_gen = min_gen;
            opt.cache_dir = gkf::resolve_cache_dir(cache);
            opt.log = quiet ? nullptr : &std::cerr;
            (void)heavy;
            const auto rc = gkf::build_relative_complex(coh_c.n, coh_w, opt);
            const auto rep = gkf::betti(rc);
            if (emit) gkf::emit_bases(*emit, rc);
            if (coh_c.format == "json")
                std::cout << gkf::report_json(rep).dump(2) << '\n';
            else
                gkf::print_report_text(std::cout, rep);
        } else if (*sd) {
            if (sd_w >= 8) std::cerr << gkf::unvalidated_banner(sd_w) << '\n';
            nlohmann::json j = nlohmann::json::array();
            for (int m = 0; m <= sd_w; ++m) {
                const auto shapes = gkf::shapes_for(sd_w, m, sd_min_gen);
                const auto total = gkf::slice_dimension(sd_c.n, sd_w, m, sd_min_gen);
                if (sd_c.format == "json") {
                    nlohmann::json shapes_j = nlohmann::json::array();
                    for (const auto& s : shapes)
                        shapes_j.push_back({{"shape", s.str()}, {"dim", gkf::shape_dimension(sd_c.n, s)}});
                    j.push_back({{"degree", m}, {"dim", total}, {"shapes", shapes_j}});
                } else {
                    std::cout << "C^" << m << "|_" << sd_w << "  dim " << total;
                    for (const auto& s : shapes) std::cout << "  [" << s.str() << "] " << gkf::shape_dimension(sd_c.n, s);
                    std::cout << '\n';
                }
            }
            if (sd_c.format == "json") std::cout << j.dump(2) << '\n';
        } else if (*dec) {
            std::vector<gkf::CochainShape> shapes;
            int w = dec_w, m = dec_m;
            if (!dec_shape.empty()) {
                const auto s = gkf::CochainShape::parse(dec_shape);
                shapes = {s};
                w = s.weight();
                m = s.degree();
            } else {
                shapes = gkf::shapes_for(w, m, 3);
            }
            std::string what = "C^" + std::to_string(m) + "|_" + std::to_string(w);
            if (!dec_shape.empty()) what += " [" + dec_shape + "]";
            gkf::Decomposition d;
            if (dec_method == "character") {
                gkf::WeightMultiset ch;
                for (const auto& s : shapes)
                    for (const auto& [x, k] : gkf::shape_character(dec_c.n, s)) ch[x] += k;
                d = gkf::decompose_character(ch, dec_c.n);
            } else {
                const gkf::ComplexSlice s(dec_c.n, w, m, 3, shapes);
                d = gkf::isotypic_report(s).multiplicities;
            }
            print_decomposition(d, dec_c.n, dec_c, what);
        } else if (*ext) {
            const gkf::CochainShape s{3, {{ext_q, ext_k}}};
            const auto d = gkf::decompose_character(gkf::shape_character(ext_c.n, s), ext_c.n);
            print_decomposition(d, ext_c.n, ext_c, "Lambda^" + std::to_string(ext_k) + " S_" + std::to_string(ext_q));
        } else if (*ten) {
            const auto a = parse_label(ten_a, ten_c.n);
            const auto b = parse_label(ten_b, ten_c.n);
            const std::string what = a.str() + " (x) " + b.str();
            gkf::Decomposition k, lr;
            if (ten_method != "lr") k = gkf::tensor_decompose_klimyk(a, b, ten_c.n);
            if (ten_method != "klimyk") lr = gkf::tensor_decompose_stable(a, b, ten_c.n);
            if (ten_method == "both" && k != lr) {
                std::cerr << "error: stable product and Klimyk disagree\n  lr     " << gkf::format_decomposition(lr)
                          << "\n  klimyk " << gkf::format_decomposition(k) << '\n';
                return 3;
            }
            print_decomposition(ten_method == "lr" ? lr : k, ten_c.n, ten_c, what);
        } else if (*dim) {
            nlohmann::json j = nlohmann::json::object();
            for (const auto& s : dim_labels) {
                const auto l = parse_label(s, dim_c.n);
                const auto d = gkf::weyl_dim(l, dim_c.n);
                if (dim_c.format == "json")
                    j[l.str()] = d;
                else
                    std::cout << "dim " << l.str() << " = " << d << '\n';
            }
            if (dim_c.format == "json") std::cout << j.dump(2) << '\n';
        }
    } catch (const gkf::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 4;
    } catch (const gkf::CacheError& e) {
        std::cerr << "cache error: " << e.what() << '\n';
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
