#pragma once

#include "aspic/analysis.hpp"
#include "aspic/argument.hpp"
#include "aspic/atoms.hpp"
#include "aspic/datalog.hpp"
#include "aspic/errors.hpp"
#include "aspic/generate.hpp"
#include "aspic/ground.hpp"
#include "aspic/naive.hpp"
#include "aspic/parse.hpp"
#include "aspic/semantics.hpp"
#include "aspic/theory.hpp"
#include "aspic/transform.hpp"
