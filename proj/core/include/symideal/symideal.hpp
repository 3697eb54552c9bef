#pragma once

#include "symideal/actions.hpp"
#include "symideal/certificates.hpp"
#include "symideal/equivariant.hpp"
#include "symideal/errors.hpp"
#include "symideal/families.hpp"
#include "symideal/groebner.hpp"
#include "symideal/io.hpp"
#include "symideal/linalg.hpp"
#include "symideal/morphisms.hpp"
#include "symideal/polynomial.hpp"
#include "symideal/ring.hpp"
