#pragma once

// Umbrella header.

#include "coxcell/cyclotomic.hpp"
#include "coxcell/dihedral.hpp"
#include "coxcell/fields.hpp"
#include "coxcell/graph.hpp"
#include "coxcell/group.hpp"
#include "coxcell/hecke.hpp"
#include "coxcell/int_poly.hpp"
#include "coxcell/kl.hpp"
#include "coxcell/laurent.hpp"
#include "coxcell/matrix.hpp"
#include "coxcell/rational.hpp"
#include "coxcell/rep.hpp"
#include "coxcell/rrep.hpp"
#include "coxcell/serialize.hpp"
#include "coxcell/words.hpp"
