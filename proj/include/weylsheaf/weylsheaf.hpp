#pragma once

#include "weylsheaf/cartan_type.hpp"
#include "weylsheaf/character_table.hpp"
#include "weylsheaf/cuspidal.hpp"
#include "weylsheaf/cyclotomic.hpp"
#include "weylsheaf/diagram.hpp"
#include "weylsheaf/errors.hpp"
#include "weylsheaf/group.hpp"
#include "weylsheaf/irr_labels.hpp"
#include "weylsheaf/parametrization.hpp"
#include "weylsheaf/partitions.hpp"
#include "weylsheaf/permutation_rep.hpp"
#include "weylsheaf/relative_weyl.hpp"
#include "weylsheaf/root_system.hpp"
#include "weylsheaf/serialize.hpp"
#include "weylsheaf/verify.hpp"
#include "weylsheaf/weyl_rep.hpp"
