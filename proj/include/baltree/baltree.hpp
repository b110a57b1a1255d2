#pragma once

#include "baltree/errors.hpp"
#include "baltree/experiments.hpp"
#include "baltree/format.hpp"
#include "baltree/maxian2.hpp"
#include "baltree/median2.hpp"
#include "baltree/objectives.hpp"
#include "baltree/oracle.hpp"
#include "baltree/tree.hpp"
