// Statement-level verification runs. Each report is a list of exact pass/fail checks plus reported facts.
#pragma once

#include "lie/io.hpp"

#include <optional>
#include <string>

namespace lie::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
    bool invariant = false;  // structural invariant of a produced admissible pair
};

struct Report {
    explicit Report(std::string id_ = "") : id(std::move(id_)) {}

    std::string id;
    std::vector<Check> checks;
    io::json facts = io::json::object();

    void add(std::string name, bool pass, std::string detail = "");
    bool pass() const;
    io::json to_json() const;
};

struct Options {
    std::optional<Family> family;
    std::optional<int> rank;
    std::uint64_t seed = 1;
    bool extended = false;  // exhaustive E6 search in e6-systems
    bool parallel = true;
};

const std::vector<std::string>& statement_ids();
// Throws std::invalid_argument for an unknown id.
Report run(const std::string& id, const Options& opt = {});

Report weyl_axioms(const Options& opt);
Report prop_n(const Options& opt);
Report sigma_constructions(const Options& opt);
Report clasif1(const Options& opt);
Report clasif2(const Options& opt);
Report e6_systems(const Options& opt);
Report thm_main(const Options& opt);
Report cor_type(const Options& opt);
Report prop_bfield(const Options& opt);
Report thm_slnh(const Options& opt);
Report thm_so(const Options& opt);
Report thm_e66(const Options& opt);
Report prop_rho(const Options& opt);

// Adds the structural checks (l abelian, dim l even, L isotropic, L + conj L spanning, J^2 = -1, J skew).
void add_invariants(Report& r, const std::string& tag, const RegularSubalgebra& k, const TwoForm& omega,
                    const Antiinvolution& sigma);

}  // namespace lie::verify
