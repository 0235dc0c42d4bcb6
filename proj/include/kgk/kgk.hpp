#pragma once

// K-theory invariants of higher-rank graph C*-algebras from commuting vertex
// matrices: exact integer Smith forms, the Koszul-type chain complex, and the
// per-rank K-group reports.

#include "kgk/abelian.hpp"
#include "kgk/construct.hpp"
#include "kgk/errors.hpp"
#include "kgk/family.hpp"
#include "kgk/integer.hpp"
#include "kgk/json_io.hpp"
#include "kgk/koszul.hpp"
#include "kgk/ktheory.hpp"
#include "kgk/matrix.hpp"
#include "kgk/skeleton.hpp"
#include "kgk/smith.hpp"
#include "kgk/text_io.hpp"
