# -*- coding: utf-8 -*-
#
# pyspgr documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing
# dir.

import sys, os

# If extensions (or modules to document with autodoc) are in another directory,
# add these directories to sys.path here.
sys.path.insert(0, os.path.abspath('..'))

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'pyspgr'
copyright = u'2026, pyspgr developers'

try:
    from pyspgr import __version__ as release
except ImportError:
    release = 'dev'
version = '.'.join(release.split('.')[:2])

exclude_patterns = ['_build']

pygments_style = 'sphinx'

autodoc_member_order = 'bysource'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'default'

html_static_path = ['_static']

htmlhelp_basename = 'pyspgrdoc'

# -- Options for LaTeX output --------------------------------------------------

latex_elements = {
}

latex_documents = [
  ('index', 'pyspgr.tex', u'pyspgr Documentation',
   u'pyspgr developers', 'manual'),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'pyspgr', u'pyspgr Documentation',
     [u'pyspgr developers'], 1)
]
