# Sphinx configuration for the hausdorffpy documentation.

import os
import sys
sys.path.insert(0, os.path.abspath('../..'))

import hausdorffpy


extensions = [
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
]

with open('doctest_global_setup.py', 'r', encoding='utf-8') as f:
    doctest_global_setup = f.read()

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
}

project = 'hausdorffpy'
copyright = '2026, The hausdorffpy developers'
author = 'The hausdorffpy developers'

version = '{0.major}.{0.minor}'.format(hausdorffpy.VERSION)
release = '{0.major}.{0.minor}.{0.patch}'.format(hausdorffpy.VERSION)

master_doc = 'index'
language = 'en'
pygments_style = 'sphinx'

# Read the Docs supplies its own theme
if os.environ.get('READTHEDOCS') != 'True':
    import sphinx_rtd_theme
    html_theme = 'sphinx_rtd_theme'
