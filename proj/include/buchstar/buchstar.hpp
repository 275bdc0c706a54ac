#ifndef BUCHSTAR_HPP
#define BUCHSTAR_HPP

#include "error.hpp"
#include "complex.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "homology.hpp"
#include "enumerative.hpp"
#include "classify.hpp"
#include "constructions.hpp"
#include "random.hpp"
#include "io.hpp"
#include "suites.hpp"
#include "version.hpp"

#endif
