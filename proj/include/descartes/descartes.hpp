#pragma once

#include "descartes/budan.hpp"
#include "descartes/error.hpp"
#include "descartes/isolation.hpp"
#include "descartes/polynomial.hpp"
#include "descartes/rational.hpp"
#include "descartes/sign_rules.hpp"
#include "descartes/sturm.hpp"
