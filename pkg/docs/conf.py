# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.insert(0, os.path.abspath('..'))


# -- Project information -----------------------------------------------------

project = 'cv-complementarity'
copyright = '2026, cv-complementarity authors'
author = 'cv-complementarity authors'

# The short X.Y version
version = '0.3'
# The full version, including alpha/beta/rc tags
release = '0.3.0'

# The default language to highlight source code in
highlight_language = 'python3'

# -- General configuration ---------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.viewcode',
              'sphinx.ext.napoleon',
              'sphinx.ext.mathjax']

templates_path = ['_templates']

master_doc = 'index'

exclude_patterns = ['_build',
                    'Thumbs.db',
                    '.DS_Store']

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'

html_theme_options = {
    'navigation_depth': 2,
    'prev_next_buttons_location': 'bottom',
}
