"""Generator matrices of rank-2 primitive reflection groups (derived by
tools/derive_exceptional.py; entries are coefficient lists in powers of
zeta_conductor)."""

RANK2_GENERATORS = {'G10': {'conductor': 12,
         'gens': [[[['0/1', '0/1', '0/1', '1/1'], ['0/1', '0/1', '0/1', '0/1']],
                   [['0/1', '0/1', '0/1', '0/1'], ['1/1', '0/1', '0/1', '0/1']]],
                  [[['0/1', '-1/2', '1/2', '1/2'], ['0/1', '-1/2', '1/2', '1/2']],
                   [['0/1', '-1/2', '-1/2', '1/2'], ['0/1', '1/2', '1/2', '-1/2']]]]},
 'G11': {'conductor': 24,
         'gens': [[[['0/1', '0/1', '0/1', '0/1', '0/1', '0/1', '1/1', '0/1'],
                    ['0/1', '0/1', '0/1', '0/1', '0/1', '0/1', '0/1', '0/1']],
                   [['0/1', '0/1', '0/1', '0/1', '0/1', '0/1', '0/1', '0/1'],
                    ['1/1', '0/1', '0/1', '0/1', '0/1', '0/1', '0/1', '0/1']]],
                  [[['0/1', '0/1', '-1/2', '0/1', '1/2', '0/1', '1/2', '0/1'],
                    ['0/1', '0/1', '-1/2', '0/1', '1/2', '0/1', '1/2', '0/1']],
                   [['0/1', '0/1', '-1/2', '0/1', '-1/2', '0/1', '1/2', '0/1'],
                    ['0/1', '0/1', '1/2', '0/1', '1/2', '0/1', '-1/2', '0/1']]],
                  [[['0/1', '-1/2', '0/1', '-1/2', '0/1', '1/2', '0/1', '0/1'],
                    ['0/1', '-1/2', '0/1', '-1/2', '0/1', '1/2', '0/1', '0/1']],
                   [['0/1', '-1/2', '0/1', '-1/2', '0/1', '1/2', '0/1', '0/1'],
                    ['0/1', '1/2', '0/1', '1/2', '0/1', '-1/2', '0/1', '0/1']]]]},
 'G13': {'conductor': 8,
         'gens': [[[['-1/1', '0/1', '0/1', '0/1'], ['0/1', '0/1', '0/1', '0/1']],
                   [['0/1', '0/1', '0/1', '0/1'], ['1/1', '0/1', '0/1', '0/1']]],
                  [[['0/1', '-1/2', '0/1', '1/2'], ['0/1', '-1/2', '0/1', '1/2']],
                   [['0/1', '-1/2', '0/1', '1/2'], ['0/1', '1/2', '0/1', '-1/2']]],
                  [[['0/1', '-1/2', '0/1', '1/2'], ['0/1', '1/2', '0/1', '1/2']],
                   [['0/1', '-1/2', '0/1', '-1/2'], ['0/1', '1/2', '0/1', '-1/2']]]]},
 'G14': {'conductor': 24,
         'gens': [[[['0/1', '0/1', '-1/2', '0/1', '1/2', '0/1', '1/2', '0/1'],
                    ['0/1', '0/1', '-1/2', '0/1', '1/2', '0/1', '1/2', '0/1']],
                   [['0/1', '0/1', '-1/2', '0/1', '-1/2', '0/1', '1/2', '0/1'],
                    ['0/1', '0/1', '1/2', '0/1', '1/2', '0/1', '-1/2', '0/1']]],
                  [[['0/1', '-1/2', '0/1', '-1/2', '0/1', '1/2', '0/1', '0/1'],
                    ['0/1', '-1/2', '0/1', '-1/2', '0/1', '1/2', '0/1', '0/1']],
                   [['0/1', '-1/2', '0/1', '-1/2', '0/1', '1/2', '0/1', '0/1'],
                    ['0/1', '1/2', '0/1', '1/2', '0/1', '-1/2', '0/1', '0/1']]]]},
 'G15': {'conductor': 24,
         'gens': [[[['0/1', '0/1', '-1/2', '0/1', '1/2', '0/1', '1/2', '0/1'],
                    ['0/1', '0/1', '-1/2', '0/1', '1/2', '0/1', '1/2', '0/1']],
                   [['0/1', '0/1', '-1/2', '0/1', '-1/2', '0/1', '1/2', '0/1'],
                    ['0/1', '0/1', '1/2', '0/1', '1/2', '0/1', '-1/2', '0/1']]],
                  [[['-1/1', '0/1', '0/1', '0/1', '0/1', '0/1', '0/1', '0/1'],
                    ['0/1', '0/1', '0/1', '0/1', '0/1', '0/1', '0/1', '0/1']],
                   [['0/1', '0/1', '0/1', '0/1', '0/1', '0/1', '0/1', '0/1'],
                    ['1/1', '0/1', '0/1', '0/1', '0/1', '0/1', '0/1', '0/1']]],
                  [[['0/1', '-1/2', '0/1', '-1/2', '0/1', '1/2', '0/1', '0/1'],
                    ['0/1', '-1/2', '0/1', '-1/2', '0/1', '1/2', '0/1', '0/1']],
                   [['0/1', '-1/2', '0/1', '-1/2', '0/1', '1/2', '0/1', '0/1'],
                    ['0/1', '1/2', '0/1', '1/2', '0/1', '-1/2', '0/1', '0/1']]]]},
 'G17': {'conductor': 20,
         'gens': [[[['1/2', '-1/2', '0/1', '1/2', '1/2', '0/1', '0/1', '0/1'],
                    ['0/1', '0/1', '1/2', '0/1', '0/1', '0/1', '0/1', '0/1']],
                   [['0/1', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1', '0/1'],
                    ['1/2', '1/2', '0/1', '-1/2', '1/2', '0/1', '0/1', '0/1']]],
                  [[['-1/2', '0/1', '0/1', '0/1', '-1/2', '0/1', '1/2', '0/1'],
                    ['0/1', '0/1', '0/1', '0/1', '-1/2', '1/2', '1/2', '0/1']],
                   [['0/1', '0/1', '0/1', '0/1', '-1/2', '-1/2', '1/2', '0/1'],
                    ['1/2', '0/1', '0/1', '0/1', '1/2', '0/1', '-1/2', '0/1']]]]},
 'G18': {'conductor': 60,
         'gens': [[[['1/2', '0/1', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1', '0/1', '1/2', '0/1',
                     '0/1', '1/2', '0/1', '0/1', '0/1'],
                    ['0/1', '0/1', '0/1', '0/1', '0/1', '0/1', '1/2', '0/1', '0/1', '0/1', '0/1',
                     '0/1', '0/1', '0/1', '0/1', '0/1']],
                   [['0/1', '0/1', '0/1', '0/1', '0/1', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1',
                     '0/1', '0/1', '0/1', '0/1', '0/1'],
                    ['1/2', '0/1', '0/1', '1/2', '0/1', '0/1', '0/1', '0/1', '0/1', '-1/2', '0/1',
                     '0/1', '1/2', '0/1', '0/1', '0/1']]],
                  [[['0/1', '0/1', '0/1', '0/1', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1', '1/2',
                     '0/1', '0/1', '0/1', '0/1', '1/2'],
                    ['0/1', '0/1', '0/1', '0/1', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1', '1/2',
                     '0/1', '0/1', '0/1', '0/1', '1/2']],
                   [['0/1', '0/1', '0/1', '0/1', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1', '-1/2',
                     '0/1', '0/1', '0/1', '0/1', '1/2'],
                    ['0/1', '0/1', '0/1', '0/1', '0/1', '1/2', '0/1', '0/1', '0/1', '0/1', '1/2',
                     '0/1', '0/1', '0/1', '0/1', '-1/2']]]]},
 'G19': {'conductor': 60,
         'gens': [[[['1/2', '0/1', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1', '0/1', '1/2', '0/1',
                     '0/1', '1/2', '0/1', '0/1', '0/1'],
                    ['0/1', '0/1', '0/1', '0/1', '0/1', '0/1', '1/2', '0/1', '0/1', '0/1', '0/1',
                     '0/1', '0/1', '0/1', '0/1', '0/1']],
                   [['0/1', '0/1', '0/1', '0/1', '0/1', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1',
                     '0/1', '0/1', '0/1', '0/1', '0/1'],
                    ['1/2', '0/1', '0/1', '1/2', '0/1', '0/1', '0/1', '0/1', '0/1', '-1/2', '0/1',
                     '0/1', '1/2', '0/1', '0/1', '0/1']]],
                  [[['0/1', '0/1', '0/1', '0/1', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1', '1/2',
                     '0/1', '0/1', '0/1', '0/1', '1/2'],
                    ['0/1', '0/1', '0/1', '0/1', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1', '1/2',
                     '0/1', '0/1', '0/1', '0/1', '1/2']],
                   [['0/1', '0/1', '0/1', '0/1', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1', '-1/2',
                     '0/1', '0/1', '0/1', '0/1', '1/2'],
                    ['0/1', '0/1', '0/1', '0/1', '0/1', '1/2', '0/1', '0/1', '0/1', '0/1', '1/2',
                     '0/1', '0/1', '0/1', '0/1', '-1/2']]],
                  [[['0/1', '0/1', '0/1', '0/1', '-1/2', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1',
                     '0/1', '0/1', '0/1', '1/2', '0/1'],
                    ['1/2', '0/1', '0/1', '0/1', '-1/2', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1',
                     '0/1', '0/1', '0/1', '1/2', '1/2']],
                   [['1/2', '0/1', '0/1', '0/1', '-1/2', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1',
                     '0/1', '0/1', '0/1', '1/2', '-1/2'],
                    ['0/1', '0/1', '0/1', '0/1', '1/2', '0/1', '1/2', '0/1', '0/1', '0/1', '0/1',
                     '0/1', '0/1', '0/1', '-1/2', '0/1']]]]},
 'G21': {'conductor': 60,
         'gens': [[[['0/1', '0/1', '0/1', '0/1', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1', '1/2',
                     '0/1', '0/1', '0/1', '0/1', '1/2'],
                    ['0/1', '0/1', '0/1', '0/1', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1', '1/2',
                     '0/1', '0/1', '0/1', '0/1', '1/2']],
                   [['0/1', '0/1', '0/1', '0/1', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1', '-1/2',
                     '0/1', '0/1', '0/1', '0/1', '1/2'],
                    ['0/1', '0/1', '0/1', '0/1', '0/1', '1/2', '0/1', '0/1', '0/1', '0/1', '1/2',
                     '0/1', '0/1', '0/1', '0/1', '-1/2']]],
                  [[['0/1', '0/1', '0/1', '0/1', '-1/2', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1',
                     '0/1', '0/1', '0/1', '1/2', '0/1'],
                    ['1/2', '0/1', '0/1', '0/1', '-1/2', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1',
                     '0/1', '0/1', '0/1', '1/2', '1/2']],
                   [['1/2', '0/1', '0/1', '0/1', '-1/2', '0/1', '-1/2', '0/1', '0/1', '0/1', '0/1',
                     '0/1', '0/1', '0/1', '1/2', '-1/2'],
                    ['0/1', '0/1', '0/1', '0/1', '1/2', '0/1', '1/2', '0/1', '0/1', '0/1', '0/1',
                     '0/1', '0/1', '0/1', '-1/2', '0/1']]]]},
 'G4': {'conductor': 12,
        'gens': [[[['0/1', '1/2', '1/2', '-1/2'], ['0/1', '-1/2', '1/2', '1/2']],
                  [['0/1', '-1/2', '-1/2', '1/2'], ['0/1', '-1/2', '1/2', '1/2']]],
                 [[['0/1', '1/2', '1/2', '-1/2'], ['0/1', '1/2', '-1/2', '-1/2']],
                  [['0/1', '1/2', '1/2', '-1/2'], ['0/1', '-1/2', '1/2', '1/2']]]]},
 'G5': {'conductor': 12,
        'gens': [[[['0/1', '-1/2', '1/2', '1/2'], ['0/1', '-1/2', '1/2', '1/2']],
                  [['0/1', '-1/2', '-1/2', '1/2'], ['0/1', '1/2', '1/2', '-1/2']]],
                 [[['0/1', '1/2', '1/2', '-1/2'], ['0/1', '-1/2', '1/2', '1/2']],
                  [['0/1', '-1/2', '-1/2', '1/2'], ['0/1', '-1/2', '1/2', '1/2']]]]},
 'G6': {'conductor': 12,
        'gens': [[[['-1/1', '0/1', '0/1', '0/1'], ['0/1', '0/1', '0/1', '0/1']],
                  [['0/1', '0/1', '0/1', '0/1'], ['1/1', '0/1', '0/1', '0/1']]],
                 [[['0/1', '1/2', '1/2', '-1/2'], ['0/1', '-1/2', '1/2', '1/2']],
                  [['0/1', '-1/2', '-1/2', '1/2'], ['0/1', '-1/2', '1/2', '1/2']]]]},
 'G7': {'conductor': 12,
        'gens': [[[['0/1', '-1/2', '1/2', '1/2'], ['0/1', '-1/2', '1/2', '1/2']],
                  [['0/1', '-1/2', '-1/2', '1/2'], ['0/1', '1/2', '1/2', '-1/2']]],
                 [[['-1/1', '0/1', '0/1', '0/1'], ['0/1', '0/1', '0/1', '0/1']],
                  [['0/1', '0/1', '0/1', '0/1'], ['1/1', '0/1', '0/1', '0/1']]],
                 [[['0/1', '1/2', '1/2', '-1/2'], ['0/1', '-1/2', '1/2', '1/2']],
                  [['0/1', '-1/2', '-1/2', '1/2'], ['0/1', '-1/2', '1/2', '1/2']]]]},
 'G9': {'conductor': 8,
        'gens': [[[['0/1', '0/1', '1/1', '0/1'], ['0/1', '0/1', '0/1', '0/1']],
                  [['0/1', '0/1', '0/1', '0/1'], ['1/1', '0/1', '0/1', '0/1']]],
                 [[['0/1', '-1/2', '0/1', '1/2'], ['0/1', '-1/2', '0/1', '1/2']],
                  [['0/1', '-1/2', '0/1', '1/2'], ['0/1', '1/2', '0/1', '-1/2']]]]}}
