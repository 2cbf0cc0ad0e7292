from hypothesis import settings

settings.register_profile("sppoly", deadline=None)
settings.load_profile("sppoly")
