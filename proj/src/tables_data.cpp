// Generated from data/paper_tables.json; keep the two in sync.
namespace wqpe {
namespace detail {

const char* kEmbeddedTablesJson = R"wqpe_json({
  "version": 1,
  "note": "Reference block-encoding data for four molecular systems and three observables, plus reference logical-qubit highwater values per window column. Dipole epsilon_target is 10 mDebye converted to atomic units (1 a.u. = 2.5417464519 Debye).",
  "systems": [
    {
      "name": "water",
      "n_orbitals": 24,
      "gap": 0.302,
      "observables": {
        "kinetic": {
          "lambda_H": 107.49, "thc_rank_H": 80, "bits_keep_H": 13, "bits_rot_H": 13,
          "lambda_F": 69.16, "thc_rank_F": 0, "bits_keep_F": 9, "bits_rot_F": 9,
          "epsilon_target": 0.0016, "unit": "hartree",
          "qubit_reference": {"rectangular": 520, "qsp": 499, "kaiser": 504}
        },
        "dipole": {
          "lambda_H": 105.66, "thc_rank_H": 60, "bits_keep_H": 10, "bits_rot_H": 10,
          "lambda_F": 20.70, "thc_rank_F": 0, "bits_keep_F": 10, "bits_rot_F": 10,
          "epsilon_target": 0.0039343093, "unit": "au",
          "qubit_reference": {"rectangular": 429, "qsp": 411, "kaiser": 416}
        },
        "eri": {
          "lambda_H": 103.83, "thc_rank_H": 70, "bits_keep_H": 13, "bits_rot_H": 13,
          "lambda_F": 114.84, "thc_rank_F": 60, "bits_keep_F": 12, "bits_rot_F": 12,
          "epsilon_target": 0.0016, "unit": "hartree",
          "qubit_reference": {"rectangular": 518, "qsp": 497, "kaiser": 502}
        }
      }
    },
    {
      "name": "ammonia",
      "n_orbitals": 29,
      "gap": 0.280,
      "observables": {
        "kinetic": {
          "lambda_H": 128.91, "thc_rank_H": 80, "bits_keep_H": 14, "bits_rot_H": 14,
          "lambda_F": 57.25, "thc_rank_F": 0, "bits_keep_F": 11, "bits_rot_F": 11,
          "epsilon_target": 0.0016, "unit": "hartree",
          "qubit_reference": {"rectangular": 628, "qsp": 608, "kaiser": 613}
        },
        "dipole": {
          "lambda_H": 118.66, "thc_rank_H": 80, "bits_keep_H": 10, "bits_rot_H": 10,
          "lambda_F": 28.39, "thc_rank_F": 0, "bits_keep_F": 10, "bits_rot_F": 10,
          "epsilon_target": 0.0039343093, "unit": "au",
          "qubit_reference": {"rectangular": 494, "qsp": 477, "kaiser": 481}
        },
        "eri": {
          "lambda_H": 139.40, "thc_rank_H": 80, "bits_keep_H": 11, "bits_rot_H": 11,
          "lambda_F": 120.95, "thc_rank_F": 90, "bits_keep_F": 10, "bits_rot_F": 10,
          "epsilon_target": 0.0016, "unit": "hartree",
          "qubit_reference": {"rectangular": 586, "qsp": 564, "kaiser": 569}
        }
      }
    },
    {
      "name": "p450_heme",
      "n_orbitals": 43,
      "gap": 0.0069,
      "observables": {
        "kinetic": {
          "lambda_H": 87.34, "thc_rank_H": 160, "bits_keep_H": 19, "bits_rot_H": 19,
          "lambda_F": 58.66, "thc_rank_F": 0, "bits_keep_F": 13, "bits_rot_F": 13,
          "epsilon_target": 0.0016, "unit": "hartree",
          "qubit_reference": {"rectangular": 1096, "qsp": 1076, "kaiser": 1081}
        },
        "dipole": {
          "lambda_H": 84.04, "thc_rank_H": 140, "bits_keep_H": 15, "bits_rot_H": 15,
          "lambda_F": 38.43, "thc_rank_F": 0, "bits_keep_F": 14, "bits_rot_F": 14,
          "epsilon_target": 0.0039343093, "unit": "au",
          "qubit_reference": {"rectangular": 910, "qsp": 891, "kaiser": 896}
        },
        "eri": {
          "lambda_H": 85.60, "thc_rank_H": 150, "bits_keep_H": 13, "bits_rot_H": 13,
          "lambda_F": 133.94, "thc_rank_F": 140, "bits_keep_F": 13, "bits_rot_F": 13,
          "epsilon_target": 0.0016, "unit": "hartree",
          "qubit_reference": {"rectangular": 819, "qsp": 797, "kaiser": 802}
        }
      }
    },
    {
      "name": "p_benzyne",
      "n_orbitals": 104,
      "gap": 0.114,
      "observables": {
        "kinetic": {
          "lambda_H": 660.91, "thc_rank_H": 440, "bits_keep_H": 16, "bits_rot_H": 16,
          "lambda_F": 199.25, "thc_rank_F": 0, "bits_keep_F": 13, "bits_rot_F": 13,
          "epsilon_target": 0.0016, "unit": "hartree",
          "qubit_reference": {"rectangular": 2646, "qsp": 2624, "kaiser": 2629}
        },
        "dipole": {
          "lambda_H": 660.22, "thc_rank_H": 430, "bits_keep_H": 17, "bits_rot_H": 17,
          "lambda_F": 238.59, "thc_rank_F": 0, "bits_keep_F": 13, "bits_rot_F": 13,
          "epsilon_target": 0.0039343093, "unit": "au",
          "qubit_reference": {"rectangular": 2708, "qsp": 2687, "kaiser": 2692}
        },
        "eri": {
          "lambda_H": 727.33, "thc_rank_H": 430, "bits_keep_H": 13, "bits_rot_H": 13,
          "lambda_F": 621.68, "thc_rank_F": 430, "bits_keep_F": 15, "bits_rot_F": 15,
          "epsilon_target": 0.0016, "unit": "hartree",
          "qubit_reference": {"rectangular": 2582, "qsp": 2558, "kaiser": 2563}
        }
      }
    }
  ]
}
)wqpe_json";

}  // namespace detail
}  // namespace wqpe
