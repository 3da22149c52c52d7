// latk: command line front end for the exact lattice toolkit.
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
// 3 resource budget exceeded.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "latk/autgroup.hpp"
#include "latk/discform.hpp"
#include "latk/genus.hpp"
#include "latk/json_io.hpp"
#include "latk/neighbors.hpp"
#include "latk/roots.hpp"
#include "latk/shortvec.hpp"

namespace {

using namespace latk;

std::string signature_str(const Inertia& s) {
    std::string out = "(" + std::to_string(s.pos) + ", " + std::to_string(s.neg);
    if (s.zero) out += ", " + std::to_string(s.zero) + " null";
    return out + ")";
}

std::string orders_str(const std::vector<Int>& orders) {
    if (orders.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < orders.size(); ++i) {
        if (i) out += " + ";
        out += "Z/" + orders[i].get_str();
    }
    return out;
}

struct LatticeOpts {
    bool with_gram = false;
    bool roots = false;
    bool aut = false;
    long long short_norm = 0;  // 0 = off
    double budget = 0;
    std::string format = "text";
};

void require_negative_definite(const Lattice& L, const char* what) {
    if (!L.is_negative_definite())
        throw std::invalid_argument(std::string(what) + ": lattice must be negative definite");
}

int cmd_lattice(const std::string& input, const LatticeOpts& opt) {
    Lattice L = lattice_from_arg(input);
    if (opt.format == "json") {
        std::cout << lattice_to_json(L, opt.with_gram, 2) << "\n";
        return 0;
    }
    std::cout << "label:     " << (L.label.empty() ? "(none)" : L.label) << "\n";
    std::cout << "rank:      " << L.rank() << "\n";
    std::cout << "det:       " << L.det().get_str() << "\n";
    std::cout << "signature: " << signature_str(L.signature()) << "\n";
    std::cout << "even:      " << (L.is_even() ? "yes" : "no") << "\n";
    if (!L.is_degenerate() && L.is_even()) {
        DiscGroup D = disc_group(L);
        std::cout << "disc group: " << orders_str(D.orders) << "\n";
        std::cout << "disc form:  " << normal_form_string(D.form) << "\n";
    }
    if (opt.roots) {
        require_negative_definite(L, "--roots");
        RootSystem rs = root_type(L.gram);
        std::cout << "roots:     " << rs.root_count.get_str() << "\n";
        std::cout << "root type: " << rs.type_string() << "\n";
        std::cout << "quotient by root span: "
                  << quotient_shape(L.rank(), rs.root_basis()).str() << "\n";
    }
    if (opt.short_norm != 0) {
        require_negative_definite(L, "--short");
        Int c = count_vectors_of_norm(L.gram, Int(long(opt.short_norm)));
        std::cout << "vectors of norm " << opt.short_norm << ": " << c.get_str() << "\n";
    }
    if (opt.aut) {
        require_negative_definite(L, "--aut");
        SearchBudget budget;
        budget.seconds = opt.budget;
        AutGroup aut = automorphism_group(L.gram, budget);
        std::cout << "aut order: " << aut.order.get_str() << "\n";
        std::cout << "aut generators: " << aut.generators.size() << "\n";
    }
    if (opt.with_gram) std::cout << "gram:\n" << L.gram.str();
    return 0;
}

int cmd_disc_form(const std::string& input) {
    Lattice L = lattice_from_arg(input);
    if (L.is_degenerate()) throw std::invalid_argument("disc-form: lattice is degenerate");
    if (!L.is_even()) throw std::invalid_argument("disc-form: lattice is not even");
    std::cout << normal_form_string(disc_group(L).form) << "\n";
    return 0;
}

struct GenusOpts {
    bool enumerate = false;
    long long p = 0;
    double budget = 0;
};

int cmd_genus(const std::string& input, const GenusOpts& opt) {
    Lattice L = lattice_from_arg(input);
    GenusSymbol sym = genus_symbol(L.gram);
    std::cout << "symbol: " << sym.str() << "\n";
    Inertia sig = L.signature();
    if (sig.pos == 0 || sig.neg == 0) {
        Rat m = genus_mass(L.gram);
        std::cout << "mass:   " << rat_str(m) << "\n";
        if (opt.enumerate) {
            SearchBudget budget;
            budget.seconds = opt.budget;
            GenusEnumeration e = enumerate_genus(L.gram, Int(long(opt.p)), budget);
            std::cout << "classes: " << e.classes.size() << (e.complete ? "" : " (incomplete)")
                      << "\n";
            for (size_t i = 0; i < e.classes.size(); ++i)
                std::cout << "  class " << i + 1 << ": roots " << e.classes[i].label
                          << ", |O| = " << e.aut_orders[i].get_str() << "\n";
            std::cout << "class mass sum: " << rat_str(e.found_mass) << "\n";
            if (!e.complete) {
                std::cerr << "latk: genus enumeration did not reach the mass\n";
                return 1;
            }
        }
    } else if (opt.enumerate) {
        throw std::invalid_argument("genus: --enumerate needs a definite lattice");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact integer lattice toolkit"};
    app.require_subcommand(1);

    std::string lattice_input;
    LatticeOpts lattice_opts;
    CLI::App* lat = app.add_subcommand("lattice", "inspect a lattice (DSL, JSON, or @file)");
    lat->add_option("input", lattice_input, "lattice description")->required();
    lat->add_flag("--with-gram", lattice_opts.with_gram, "include the Gram matrix");
    lat->add_flag("--roots", lattice_opts.roots, "root system of a negative definite lattice");
    lat->add_flag("--aut", lattice_opts.aut, "isometry group order (negative definite)");
    lat->add_option("--short", lattice_opts.short_norm, "count vectors of this norm");
    lat->add_option("--budget", lattice_opts.budget, "time budget in seconds for searches");
    lat->add_option("--format", lattice_opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string disc_input;
    CLI::App* disc = app.add_subcommand("disc-form", "normal form of the discriminant form");
    disc->add_option("input", disc_input, "lattice description")->required();

    std::string genus_input;
    GenusOpts genus_opts;
    CLI::App* gen = app.add_subcommand("genus", "genus symbol, exact mass, class enumeration");
    gen->add_option("input", genus_input, "lattice description")->required();
    gen->add_flag("--enumerate", genus_opts.enumerate, "enumerate classes until the mass certifies");
    gen->add_option("--p", genus_opts.p, "neighbor prime (default: smallest valid)");
    gen->add_option("--budget", genus_opts.budget, "time budget in seconds for searches");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (lat->parsed()) return cmd_lattice(lattice_input, lattice_opts);
        if (disc->parsed()) return cmd_disc_form(disc_input);
        if (gen->parsed()) return cmd_genus(genus_input, genus_opts);
    } catch (const latk::BudgetExceeded& e) {
        std::cerr << "latk: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "latk: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "latk: internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
