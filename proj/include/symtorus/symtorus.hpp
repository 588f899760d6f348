#pragma once

#include "symtorus/capacities.hpp"
#include "symtorus/distances.hpp"
#include "symtorus/ech.hpp"
#include "symtorus/errors.hpp"
#include "symtorus/geometry.hpp"
#include "symtorus/io.hpp"
#include "symtorus/rational.hpp"
#include "symtorus/reeb.hpp"
