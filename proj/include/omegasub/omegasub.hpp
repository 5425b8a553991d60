#pragma once

#include "omegasub/alphabet.hpp"
#include "omegasub/automaton.hpp"
#include "omegasub/bool_relation.hpp"
#include "omegasub/desubstitution.hpp"
#include "omegasub/dot.hpp"
#include "omegasub/errors.hpp"
#include "omegasub/graph.hpp"
#include "omegasub/homomorphism.hpp"
#include "omegasub/meta.hpp"
#include "omegasub/single.hpp"
#include "omegasub/sturmian.hpp"
#include "omegasub/text_format.hpp"
