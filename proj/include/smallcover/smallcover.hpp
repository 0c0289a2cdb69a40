#ifndef SMALLCOVER_SMALLCOVER_HPP
#define SMALLCOVER_SMALLCOVER_HPP

#include "smallcover/charfn.hpp"
#include "smallcover/coxeter.hpp"
#include "smallcover/dim3.hpp"
#include "smallcover/document.hpp"
#include "smallcover/fixtures.hpp"
#include "smallcover/gf2.hpp"
#include "smallcover/pi1.hpp"
#include "smallcover/polytope.hpp"

#endif  // SMALLCOVER_SMALLCOVER_HPP
