#pragma once

// Everything at once.

#include "rahecke/error.hpp"
#include "rahecke/rational.hpp"
#include "rahecke/coxeter.hpp"
#include "rahecke/ball.hpp"
#include "rahecke/corpus.hpp"
#include "rahecke/polynomial.hpp"
#include "rahecke/parameter.hpp"
#include "rahecke/growth.hpp"
#include "rahecke/hecke.hpp"
#include "rahecke/radial.hpp"
#include "rahecke/operator.hpp"
#include "rahecke/verify.hpp"
