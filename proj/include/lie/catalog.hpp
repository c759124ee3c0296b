// Reference root subsets: the quaternionic, Lorentz and E6 sigma-positive systems.
#pragma once

#include "lie/sigma_systems.hpp"

namespace lie::catalog {

// sl_2n: unprimed indices 0..n-1, primed n..2n-1.
RootMask slh_type_a(const RootSystem& rs);
RootMask slh_type_b(const RootSystem& rs);
LabelledSystems slh_types(const RootSystem& rs);

// D_n: a = R+, b and c exchange one of e_{n-1} +- e_n.
RootMask lorentz_type(const RootSystem& rs, char type);
LabelledSystems lorentz_types(const RootSystem& rs);

// E6 systems R0^(k), k = 1..6, and the separately listed images sigma(R0^(k)).
RootMask e6_system(const RootSystem& rs, int k);
RootMask e6_listed_image(const RootSystem& rs, int k);
LabelledSystems e6_systems(const RootSystem& rs);

}  // namespace lie::catalog
