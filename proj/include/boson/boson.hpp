#pragma once

#include "boson/combinatorics.hpp"
#include "boson/errors.hpp"
#include "boson/fock.hpp"
#include "boson/format.hpp"
#include "boson/got.hpp"
#include "boson/identities.hpp"
#include "boson/lower.hpp"
#include "boson/multipoly.hpp"
#include "boson/operators.hpp"
#include "boson/parser.hpp"
#include "boson/rational.hpp"
#include "boson/rewrite.hpp"
#include "boson/series.hpp"
