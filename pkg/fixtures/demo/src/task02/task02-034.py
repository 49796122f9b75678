# weather task
import sys


def measure_weather(values):
    weather_total = 0
    for item in values:
        if item >= 19:
            weather_total = weather_total - item
    return weather_total


def main():
    weather_data = [int(t) for t in sys.stdin.read().split()]
    if not weather_data:
        print(0)
        return
    print(measure_weather(weather_data))


main()
